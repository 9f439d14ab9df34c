#pragma once

// Batch evaluation: loading submissions of any supported kind, scoring
// them against truth plans, line-delimited run files and leaderboards.
//
// Submissions live at <root>/<submitter>/<apartment>/<epoch>.<ext> where ext
// is svg, png or json (an interchange record).

#include <blueprint/extractor.hpp>
#include <blueprint/ir_json.hpp>
#include <blueprint/raster.hpp>
#include <blueprint/scorer.hpp>
#include <blueprint/svg.hpp>
#include <blueprint/validator.hpp>
#include <blueprint/vector_plan.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace blueprint {

namespace fs = std::filesystem;

struct PipelineOptions {
  int tolerance = kDefaultTolerance;
  int default_raster_width = kDefaultCanvas;
  int default_raster_height = kDefaultCanvas;
};

enum class InputKind { Raster, Vector, Record };

inline constexpr std::string_view to_string(InputKind k) {
  switch (k) {
    case InputKind::Raster: return "raster";
    case InputKind::Vector: return "vector";
    case InputKind::Record: return "record";
  }
  return "?";
}

/// Unreadable file (missing, permissions). Distinct from content errors.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw IoError("no such file: " + path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Decide the input kind from the extension, falling back to content.
inline InputKind detect_kind(const fs::path& path, std::string_view content) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".svg") return InputKind::Vector;
  if (ext == ".png") return InputKind::Raster;
  if (ext == ".json") return InputKind::Record;
  if (content.size() >= 8 && content.substr(0, 8) == std::string_view("\x89PNG\r\n\x1a\n", 8)) return InputKind::Raster;
  if (content.find("<svg") != std::string_view::npos) return InputKind::Vector;
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && content[first] == '{') return InputKind::Record;
  return InputKind::Raster;
}

struct LoadedPlan {
  InputKind kind = InputKind::Raster;
  FloorPlanIR ir;
  std::optional<PixelGrid> grid;
  std::vector<SvgError> svg_errors;
};

/// Load any supported input and run it through validation and extraction.
/// Throws IoError, LoadError, SvgSyntaxError or IrError.
inline LoadedPlan load_plan(const fs::path& path, const PipelineOptions& opt = {}) {
  const std::string content = read_file(path);
  if (content.empty()) throw LoadError(LoadErrorCode::Undecodable, "empty file: " + path.string());
  LoadedPlan out;
  out.kind = detect_kind(path, content);
  switch (out.kind) {
    case InputKind::Record:
      out.ir = deserialize(content);
      break;
    case InputKind::Vector: {
      SvgOptions so{opt.tolerance, opt.default_raster_width, opt.default_raster_height};
      SvgParseResult parsed = parse_svg(content, so);
      out.svg_errors = std::move(parsed.errors);
      out.grid = rasterize(parsed.plan);
      out.ir = extract(*out.grid);
      break;
    }
    case InputKind::Raster:
      out.grid = load_image(path, opt.tolerance);
      out.ir = extract(*out.grid);
      break;
  }
  return out;
}

struct ResultRecord {
  std::string apartment;
  std::string submitter;
  int epoch = 0;
  ScoreBreakdown breakdown;
  std::size_t violation_count = 0;
  std::optional<std::string> failure;
  std::vector<std::string> notes;
  std::string started_at;
  std::string finished_at;
};

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Score a candidate plan record against a truth record. Pure.
inline ResultRecord score_records(const FloorPlanIR& candidate, const FloorPlanIR& truth) {
  ResultRecord r;
  r.breakdown = composite_score(candidate, truth);
  r.violation_count = candidate.violations.size();
  return r;
}

/// Score one submission file against a truth file. Problems with the
/// submission produce a zero record with a failure reason; an unreadable
/// truth file throws.
inline ResultRecord score_submission(const fs::path& submission, const FloorPlanIR& truth,
                                     const PipelineOptions& opt = {}) {
  const std::string started = utc_timestamp();
  ResultRecord r;
  try {
    LoadedPlan cand = load_plan(submission, opt);
    r = score_records(cand.ir, truth);
    for (const SvgError& e : cand.svg_errors)
      r.notes.push_back(std::string(to_string(e.code)) + " at " + e.location + ": " + e.message);
  } catch (const std::exception& e) {
    r.breakdown = {};
    r.failure = e.what();
  }
  r.started_at = started;
  r.finished_at = utc_timestamp();
  return r;
}

inline ResultRecord score_submission(const fs::path& submission, const fs::path& truth_path,
                                     const PipelineOptions& opt = {}) {
  const FloorPlanIR truth = load_plan(truth_path, opt).ir;  // throws: the dataset must be intact
  return score_submission(submission, truth, opt);
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::json to_json(const ScoreBreakdown& s) {
  return {{"edge_overlap", s.edge_overlap},     {"degree_corr", s.degree_corr},
          {"density_sim", s.density_sim},       {"room_count_sim", s.room_count_sim},
          {"door_count_sim", s.door_count_sim}, {"orientation_sim", s.orientation_sim},
          {"composite", s.composite}};
}

inline ScoreBreakdown breakdown_from_json(const nlohmann::json& j) {
  ScoreBreakdown s;
  s.edge_overlap = j.at("edge_overlap").get<double>();
  s.degree_corr = j.at("degree_corr").get<double>();
  s.density_sim = j.at("density_sim").get<double>();
  s.room_count_sim = j.at("room_count_sim").get<double>();
  s.door_count_sim = j.at("door_count_sim").get<double>();
  s.orientation_sim = j.at("orientation_sim").get<double>();
  s.composite = j.at("composite").get<double>();
  return s;
}

inline nlohmann::json to_json(const ResultRecord& r) {
  nlohmann::json j;
  j["apartment"] = r.apartment;
  j["submitter"] = r.submitter;
  j["epoch"] = r.epoch;
  j["breakdown"] = to_json(r.breakdown);
  j["violations"] = r.violation_count;
  j["failure"] = r.failure ? nlohmann::json(*r.failure) : nlohmann::json(nullptr);
  j["notes"] = r.notes;
  j["started_at"] = r.started_at;
  j["finished_at"] = r.finished_at;
  return j;
}

inline ResultRecord record_from_json(const nlohmann::json& j) {
  ResultRecord r;
  r.apartment = j.at("apartment").get<std::string>();
  r.submitter = j.at("submitter").get<std::string>();
  r.epoch = j.at("epoch").get<int>();
  r.breakdown = breakdown_from_json(j.at("breakdown"));
  r.violation_count = j.value("violations", std::size_t{0});
  if (j.contains("failure") && !j.at("failure").is_null()) r.failure = j.at("failure").get<std::string>();
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  r.started_at = j.value("started_at", std::string{});
  r.finished_at = j.value("finished_at", std::string{});
  return r;
}

inline std::string to_line(const ResultRecord& r) { return to_json(r).dump(); }

// ---------------------------------------------------------------------------
// Manifest

inline constexpr int kManifestVersion = 1;

struct ApartmentEntry {
  std::string id;
  fs::path truth;
  std::optional<fs::path> photos;
};

class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Manifest schema:
///   {"manifest_version": 1,
///    "apartments": [{"id": "apt-01", "truth": "truth/apt-01.png", "photos": "photos/apt-01"}]}
/// Relative paths resolve against the manifest's directory.
inline std::vector<ApartmentEntry> load_manifest(const fs::path& path) {
  const std::string text = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ManifestError("manifest is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object() || j.value("manifest_version", 0) != kManifestVersion)
    throw ManifestError("manifest must be an object with \"manifest_version\": 1");
  if (!j.contains("apartments") || !j.at("apartments").is_array())
    throw ManifestError("manifest needs an \"apartments\" array");
  const fs::path base = path.parent_path();
  std::vector<ApartmentEntry> out;
  std::set<std::string> seen;
  for (const auto& a : j.at("apartments")) {
    if (!a.is_object() || !a.contains("id") || !a.at("id").is_string() || !a.contains("truth") ||
        !a.at("truth").is_string())
      throw ManifestError("each apartment needs string fields \"id\" and \"truth\"");
    ApartmentEntry e;
    e.id = a.at("id").get<std::string>();
    if (e.id.empty() || !seen.insert(e.id).second) throw ManifestError("duplicate or empty apartment id '" + e.id + "'");
    e.truth = base / a.at("truth").get<std::string>();
    if (a.contains("photos") && a.at("photos").is_string()) e.photos = base / a.at("photos").get<std::string>();
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const ApartmentEntry& a, const ApartmentEntry& b) { return a.id < b.id; });
  return out;
}

inline void write_manifest(const fs::path& path, const std::vector<ApartmentEntry>& entries) {
  nlohmann::json j;
  j["manifest_version"] = kManifestVersion;
  j["apartments"] = nlohmann::json::array();
  for (const ApartmentEntry& e : entries) {
    nlohmann::json a{{"id", e.id}, {"truth", e.truth.generic_string()}};
    if (e.photos) a["photos"] = e.photos->generic_string();
    j["apartments"].push_back(a);
  }
  std::ofstream(path) << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Batch scoring

struct BatchOptions {
  int epochs = 1;
  unsigned threads = 1;
  PipelineOptions pipeline;
};

struct BatchSummary {
  std::size_t scored = 0;
  std::vector<std::string> skipped;  // missing (submitter, apartment, epoch) triples
  std::vector<std::string> errors;   // per-entry problems (e.g. unreadable truth)
};

inline std::optional<fs::path> find_submission(const fs::path& dir, int epoch) {
  for (const char* ext : {".svg", ".png", ".json"}) {
    fs::path p = dir / (std::to_string(epoch) + ext);
    std::error_code ec;
    if (fs::is_regular_file(p, ec)) return p;
  }
  return std::nullopt;
}

/// Score every (submitter, apartment, epoch) triple present under
/// `submissions_root`. Records reach `sink` ordered by submitter, apartment,
/// epoch; scoring itself may run on several threads.
inline BatchSummary batch_score(const fs::path& manifest_path, const fs::path& submissions_root,
                                const std::function<void(const ResultRecord&)>& sink, const BatchOptions& opt = {}) {
  const std::vector<ApartmentEntry> apartments = load_manifest(manifest_path);
  std::error_code ec;
  if (!fs::is_directory(submissions_root, ec)) throw IoError("no such directory: " + submissions_root.string());

  BatchSummary summary;
  std::map<std::string, FloorPlanIR> truths;
  for (const ApartmentEntry& a : apartments) {
    try {
      truths.emplace(a.id, load_plan(a.truth, opt.pipeline).ir);
    } catch (const std::exception& e) {
      summary.errors.push_back("apartment " + a.id + ": cannot read truth plan: " + e.what());
    }
  }

  std::vector<std::string> submitters;
  for (const auto& entry : fs::directory_iterator(submissions_root))
    if (entry.is_directory()) submitters.push_back(entry.path().filename().string());
  std::sort(submitters.begin(), submitters.end());

  struct Task {
    std::string submitter;
    const ApartmentEntry* apartment;
    int epoch;
    fs::path file;
  };
  std::vector<Task> tasks;
  for (const std::string& s : submitters)
    for (const ApartmentEntry& a : apartments) {
      if (!truths.count(a.id)) continue;
      for (int e = 0; e < opt.epochs; ++e) {
        if (auto file = find_submission(submissions_root / s / a.id, e))
          tasks.push_back({s, &a, e, *file});
        else
          summary.skipped.push_back(s + "/" + a.id + "/" + std::to_string(e));
      }
    }

  std::vector<ResultRecord> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      ResultRecord r = score_submission(t.file, truths.at(t.apartment->id), opt.pipeline);
      r.apartment = t.apartment->id;
      r.submitter = t.submitter;
      r.epoch = t.epoch;
      results[i] = std::move(r);
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(tasks.size())));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(work);
  }
  for (const ResultRecord& r : results) sink(r);
  summary.scored = results.size();
  return summary;
}

/// Append records to a run file, one JSON object per line.
class RunFileWriter {
 public:
  explicit RunFileWriter(const fs::path& path) : out_(path, std::ios::app) {
    if (!out_) throw IoError("cannot open run file for appending: " + path.string());
  }
  void write(const ResultRecord& r) { out_ << to_line(r) << '\n' << std::flush; }

 private:
  std::ofstream out_;
};

/// Read a run file. Later lines for the same (apartment, submitter, epoch)
/// replace earlier ones, so re-running a batch into the same file is safe.
inline std::vector<ResultRecord> read_run_file(const fs::path& path) {
  const std::string text = read_file(path);
  std::vector<ResultRecord> records;
  std::map<std::tuple<std::string, std::string, int>, std::size_t> index;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ResultRecord r;
    try {
      r = record_from_json(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw ManifestError("run file line " + std::to_string(line_no) + ": " + e.what());
    }
    const auto key = std::make_tuple(r.apartment, r.submitter, r.epoch);
    if (auto it = index.find(key); it != index.end()) {
      records[it->second] = std::move(r);
    } else {
      index.emplace(key, records.size());
      records.push_back(std::move(r));
    }
  }
  return records;
}

// ---------------------------------------------------------------------------
// Leaderboard

struct LeaderboardRow {
  std::string submitter;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single record
  ScoreBreakdown component_means;
  std::size_t samples = 0;
};

inline std::vector<LeaderboardRow> aggregate(const std::vector<ResultRecord>& records) {
  std::map<std::string, std::vector<const ResultRecord*>> groups;
  for (const ResultRecord& r : records) groups[r.submitter].push_back(&r);
  std::vector<LeaderboardRow> rows;
  for (const auto& [submitter, rs] : groups) {
    LeaderboardRow row;
    row.submitter = submitter;
    row.samples = rs.size();
    const double n = static_cast<double>(rs.size());
    // Mean shifted by the first sample: k identical records average exactly.
    auto mean = [&](double ScoreBreakdown::*field) {
      const double first = rs.front()->breakdown.*field;
      double shift = 0.0;
      for (const ResultRecord* r : rs) shift += r->breakdown.*field - first;
      return first + shift / n;
    };
    ScoreBreakdown& m = row.component_means;
    for (double ScoreBreakdown::*f :
         {&ScoreBreakdown::edge_overlap, &ScoreBreakdown::degree_corr, &ScoreBreakdown::density_sim,
          &ScoreBreakdown::room_count_sim, &ScoreBreakdown::door_count_sim, &ScoreBreakdown::orientation_sim,
          &ScoreBreakdown::composite})
      m.*f = mean(f);
    row.mean = m.composite;
    if (rs.size() > 1) {
      double ss = 0.0;
      for (const ResultRecord* r : rs) ss += (r->breakdown.composite - row.mean) * (r->breakdown.composite - row.mean);
      row.stddev = std::sqrt(ss / (n - 1.0));
    }
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const LeaderboardRow& a, const LeaderboardRow& b) {
    return a.mean != b.mean ? a.mean > b.mean : a.submitter < b.submitter;
  });
  return rows;
}

inline std::vector<LeaderboardRow> aggregate(const fs::path& run_file) { return aggregate(read_run_file(run_file)); }

inline nlohmann::json to_json(const LeaderboardRow& row) {
  return {{"submitter", row.submitter},
          {"mean", row.mean},
          {"std", row.stddev},
          {"samples", row.samples},
          {"components", to_json(row.component_means)}};
}

}  // namespace blueprint
