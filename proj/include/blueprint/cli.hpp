#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage error, 2 I/O or
// input error, 3 internal failure.
//
// Environment: BLUEPRINT_RASTER_SIZE ("N" or "WxH") sets the raster size used
// for vector inputs without dimensions; BLUEPRINT_TOLERANCE sets the
// per-channel color tolerance. Flags override both.

#include <blueprint/harness.hpp>
#include <blueprint/synth.hpp>

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace blueprint {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitInternal = 3;

namespace cli_detail {

struct EnvDefaults {
  int raster_width = kDefaultCanvas;
  int raster_height = kDefaultCanvas;
  int tolerance = kDefaultTolerance;
  std::vector<std::string> warnings;
};

inline EnvDefaults read_env() {
  EnvDefaults d;
  if (const char* s = std::getenv("BLUEPRINT_RASTER_SIZE"); s && *s) {
    int w = 0, h = 0;
    char extra = 0;
    const int n = std::sscanf(s, "%dx%d%c", &w, &h, &extra);
    if (n == 1 && w > 0) {
      d.raster_width = d.raster_height = w;
    } else if (n == 2 && w > 0 && h > 0) {
      d.raster_width = w;
      d.raster_height = h;
    } else {
      d.warnings.push_back("ignoring BLUEPRINT_RASTER_SIZE='" + std::string(s) + "' (expected N or WxH)");
    }
  }
  if (const char* s = std::getenv("BLUEPRINT_TOLERANCE"); s && *s) {
    char* end = nullptr;
    const long t = std::strtol(s, &end, 10);
    if (*end == '\0' && t >= 0 && t <= 255)
      d.tolerance = static_cast<int>(t);
    else
      d.warnings.push_back("ignoring BLUEPRINT_TOLERANCE='" + std::string(s) + "' (expected 0..255)");
  }
  return d;
}

inline std::string fixed(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

inline std::string location(const std::optional<Point>& p) {
  return p ? " at (" + std::to_string(p->x) + ", " + std::to_string(p->y) + ")" : "";
}

inline void print_violations(std::ostream& out, const std::vector<RuleViolation>& vs) {
  if (vs.empty()) {
    out << "no violations\n";
    return;
  }
  for (const RuleViolation& v : vs) out << "rule " << v.rule << ": " << v.description << location(v.location) << "\n";
}

inline void print_breakdown(std::ostream& out, const ScoreBreakdown& s) {
  const std::pair<const char*, double> rows[] = {
      {"edge_overlap", s.edge_overlap},       {"degree_corr", s.degree_corr},
      {"density_sim", s.density_sim},         {"room_count_sim", s.room_count_sim},
      {"door_count_sim", s.door_count_sim},   {"orientation_sim", s.orientation_sim},
      {"composite", s.composite}};
  for (const auto& [name, value] : rows) out << std::left << std::setw(16) << name << " " << fixed(value) << "\n";
}

inline void print_table(std::ostream& out, const std::vector<LeaderboardRow>& rows) {
  out << std::left << std::setw(24) << "submitter" << std::right << std::setw(8) << "n" << std::setw(10) << "mean"
      << std::setw(10) << "std" << std::setw(10) << "edges" << std::setw(10) << "degree" << std::setw(10)
      << "density" << std::setw(10) << "rooms" << std::setw(10) << "doors" << std::setw(10) << "orient" << "\n";
  for (const LeaderboardRow& r : rows) {
    const ScoreBreakdown& m = r.component_means;
    out << std::left << std::setw(24) << r.submitter << std::right << std::setw(8) << r.samples << std::setw(10)
        << fixed(r.mean) << std::setw(10) << fixed(r.stddev) << std::setw(10) << fixed(m.edge_overlap)
        << std::setw(10) << fixed(m.degree_corr) << std::setw(10) << fixed(m.density_sim) << std::setw(10)
        << fixed(m.room_count_sim) << std::setw(10) << fixed(m.door_count_sim) << std::setw(10)
        << fixed(m.orientation_sim) << "\n";
  }
}

inline void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  f << text;
  if (!f) throw IoError("write failed: " + path.string());
}

inline void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

inline std::string plan_name(std::uint64_t seed) { return "plan-" + std::to_string(seed); }

}  // namespace cli_detail

/// Run the command line. `argv[0]` is the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  const EnvDefaults env = read_env();
  for (const std::string& w : env.warnings) err << "warning: " << w << "\n";

  CLI::App app{"Floor-plan benchmark: validate, extract, score and batch-score floor plans"};
  app.name(args.empty() ? "blueprint" : args[0]);
  app.require_subcommand(1);
  app.footer(
      "Environment:\n"
      "  BLUEPRINT_RASTER_SIZE  raster size for vector inputs without dimensions, N or WxH (default " +
      std::to_string(kDefaultCanvas) + "x" + std::to_string(kDefaultCanvas) +
      ")\n"
      "  BLUEPRINT_TOLERANCE    per-channel color tolerance 0..255 (default " +
      std::to_string(kDefaultTolerance) +
      ")\n"
      "Exit codes: 0 ok, 1 usage error, 2 I/O or input error, 3 internal failure");

  PipelineOptions pipeline;
  pipeline.tolerance = env.tolerance;
  pipeline.default_raster_width = env.raster_width;
  pipeline.default_raster_height = env.raster_height;
  app.add_option("--tolerance", pipeline.tolerance, "Per-channel color tolerance")
      ->check(CLI::Range(0, 255))
      ->capture_default_str();

  std::string format = "text";
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
  };

  // validate
  std::string image;
  CLI::App* validate_cmd = app.add_subcommand("validate", "Check an image or SVG against the format rules");
  validate_cmd->add_option("image", image, "Raster or SVG floor plan")->required();
  add_format(validate_cmd, {"text", "json"});

  // extract
  std::string ir_out;
  CLI::App* extract_cmd = app.add_subcommand("extract", "Extract the room graph record from a floor plan");
  extract_cmd->add_option("image", image, "Raster or SVG floor plan")->required();
  extract_cmd->add_option("--out", ir_out, "Write the record to this file instead of stdout");
  add_format(extract_cmd, {"text", "json"});

  // score
  std::string candidate, truth;
  CLI::App* score_cmd = app.add_subcommand("score", "Score a candidate plan against a ground-truth plan");
  score_cmd->add_option("candidate", candidate, "Candidate plan (raster, SVG or record)")->required();
  score_cmd->add_option("truth", truth, "Ground-truth plan (raster, SVG or record)")->required();
  add_format(score_cmd, {"text", "json"});

  // batch
  std::string manifest, subs, run_out;
  BatchOptions batch_opt;
  CLI::App* batch_cmd = app.add_subcommand("batch", "Score every submission under a directory tree");
  batch_cmd->add_option("manifest", manifest, "Manifest file (JSON)")->required();
  batch_cmd->add_option("submissions", subs, "Root laid out as <submitter>/<apartment>/<epoch>.<ext>")->required();
  batch_cmd->add_option("--epochs", batch_opt.epochs, "Epochs per apartment")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  batch_cmd->add_option("--threads", batch_opt.threads, "Scoring threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  batch_cmd->add_option("--out", run_out, "Append records to this run file instead of stdout");

  // synth
  CLI::App* synth_cmd = app.add_subcommand("synth", "Synthetic plans with known ground truth");
  synth_cmd->require_subcommand(1);
  SynthConfig synth_cfg;
  std::uint64_t first_seed = 0;
  int count = 1;
  std::string out_dir = ".";
  auto add_synth_config = [&](CLI::App* sub) {
    sub->add_option("--min-rooms", synth_cfg.min_rooms, "Minimum room count")->capture_default_str();
    sub->add_option("--max-rooms", synth_cfg.max_rooms, "Maximum room count")->capture_default_str();
    sub->add_option("--extra-door-prob", synth_cfg.extra_door_prob, "Door probability for non-tree walls")
        ->capture_default_str();
  };

  CLI::App* gen_cmd = synth_cmd->add_subcommand("gen", "Write plans as PNG, SVG and record plus a manifest");
  gen_cmd->add_option("--seed", first_seed, "First seed")->capture_default_str();
  gen_cmd->add_option("--count", count, "Number of plans")->check(CLI::PositiveNumber)->capture_default_str();
  gen_cmd->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
  add_synth_config(gen_cmd);

  std::string op_name;
  PerturbOptions perturb_opt;
  CLI::App* perturb_cmd = synth_cmd->add_subcommand("perturb", "Write a perturbed plan and its record");
  perturb_cmd->add_option("--seed", first_seed, "Plan seed")->capture_default_str();
  perturb_cmd->add_option("--op", op_name, "RemoveDoor, AddDoor, SwapRanks, PunchGap, DeleteDot or OffPaletteSpeck")
      ->required();
  perturb_cmd->add_option("--perturb-seed", perturb_opt.seed, "Seed for the perturbation")->capture_default_str();
  perturb_cmd->add_flag("--preserve-connectivity", perturb_opt.preserve_connectivity,
                        "RemoveDoor keeps the plan connected");
  perturb_cmd->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
  add_synth_config(perturb_cmd);

  std::size_t pairs = 100;
  CLI::App* baseline_cmd = synth_cmd->add_subcommand("baseline", "Mean composite between random baseline plans");
  baseline_cmd->add_option("--seed", first_seed, "First seed; pair i uses seeds seed+2i and seed+2i+1")
      ->capture_default_str();
  baseline_cmd->add_option("--pairs", pairs, "Number of pairs")->check(CLI::PositiveNumber)->capture_default_str();
  add_synth_config(baseline_cmd);
  add_format(baseline_cmd, {"text", "json"});

  // report
  std::string run_file;
  CLI::App* report_cmd = app.add_subcommand("report", "Aggregate a run file into a leaderboard");
  report_cmd->add_option("run-file", run_file, "Run file")->required();
  add_format(report_cmd, {"table", "json"});

  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (report_cmd->parsed() && report_cmd->count("--format") == 0) format = "table";

  try {
    if (validate_cmd->parsed()) {
      const LoadedPlan p = load_plan(image, pipeline);
      if (format == "json") {
        nlohmann::json j{{"violations", nlohmann::json::array()}, {"svg_errors", nlohmann::json::array()}};
        for (const RuleViolation& v : p.ir.violations) j["violations"].push_back(violation_to_json(v));
        for (const SvgError& e : p.svg_errors)
          j["svg_errors"].push_back({{"code", to_string(e.code)}, {"element", e.element}, {"message", e.message}});
        out << j.dump(2) << "\n";
      } else {
        for (const SvgError& e : p.svg_errors)
          out << "svg " << to_string(e.code) << ": " << e.element << ": " << e.message << "\n";
        print_violations(out, p.ir.violations);
      }
      return kExitOk;
    }

    if (extract_cmd->parsed()) {
      const LoadedPlan p = load_plan(image, pipeline);
      if (format == "text" && ir_out.empty()) {
        out << p.ir.rooms.size() << " rooms, " << p.ir.doors.size() << " doors, " << p.ir.edges.size()
            << " edges, " << p.ir.violations.size() << " violations\n";
        for (const RoomEntry& r : p.ir.rooms)
          out << "room " << r.rank << ": area " << r.area << ", centroid (" << r.centroid.x << ", " << r.centroid.y
              << ")\n";
        for (const Edge& e : p.ir.edges) out << "edge " << e.a << " - " << e.b << "\n";
        return kExitOk;
      }
      const std::string text = serialize(p.ir);
      if (ir_out.empty())
        out << text;
      else
        write_text(ir_out, text);
      return kExitOk;
    }

    if (score_cmd->parsed()) {
      const ResultRecord r = score_submission(candidate, truth, pipeline);
      if (format == "json") {
        out << to_json(r).dump(2) << "\n";
      } else {
        print_breakdown(out, r.breakdown);
        if (r.failure) out << "failure: " << *r.failure << "\n";
        for (const std::string& n : r.notes) out << "note: " << n << "\n";
      }
      return kExitOk;
    }

    if (batch_cmd->parsed()) {
      batch_opt.pipeline = pipeline;
      std::optional<RunFileWriter> writer;
      if (!run_out.empty()) writer.emplace(run_out);
      const BatchSummary summary = batch_score(
          manifest, subs,
          [&](const ResultRecord& r) {
            if (writer)
              writer->write(r);
            else
              out << to_line(r) << "\n";
          },
          batch_opt);
      err << summary.scored << " scored, " << summary.skipped.size() << " skipped, " << summary.errors.size()
          << " errors\n";
      for (const std::string& s : summary.skipped) err << "skipped: " << s << "\n";
      for (const std::string& e : summary.errors) err << "error: " << e << "\n";
      return kExitOk;
    }

    if (gen_cmd->parsed()) {
      ensure_dir(out_dir);
      std::vector<ApartmentEntry> entries;
      for (int i = 0; i < count; ++i) {
        SynthConfig cfg = synth_cfg;
        cfg.seed = first_seed + static_cast<std::uint64_t>(i);
        const SynthPlan plan = generate(cfg);
        const std::string name = plan_name(cfg.seed);
        const fs::path dir(out_dir);
        save_png(dir / (name + ".png"), plan.raster);
        write_text(dir / (name + ".svg"), render_to_svg(plan));
        write_text(dir / (name + ".json"), serialize(plan.truth));
        entries.push_back({name, name + ".png", std::nullopt});
        out << name << ": " << plan.truth.rooms.size() << " rooms, " << plan.truth.doors.size() << " doors\n";
      }
      write_manifest(fs::path(out_dir) / "manifest.json", entries);
      return kExitOk;
    }

    if (perturb_cmd->parsed()) {
      const auto op = parse_perturb_op(op_name);
      if (!op) {
        err << "unknown perturbation '" << op_name << "'\n";
        return kExitUsage;
      }
      ensure_dir(out_dir);
      SynthConfig cfg = synth_cfg;
      cfg.seed = first_seed;
      const SynthPlan plan = perturb(generate(cfg), *op, perturb_opt);
      const std::string name = plan_name(cfg.seed) + "-" + std::string(to_string(*op));
      const fs::path dir(out_dir);
      save_png(dir / (name + ".png"), plan.raster);
      write_text(dir / (name + ".json"), serialize(plan.truth));
      out << name << ": " << plan.truth.rooms.size() << " rooms, " << plan.truth.doors.size() << " doors";
      if (plan.expected_rule) out << ", expected violation of rule " << *plan.expected_rule;
      out << "\n";
      return kExitOk;
    }

    if (baseline_cmd->parsed()) {
      const BaselineStats s = random_baseline_score(synth_cfg, first_seed, pairs);
      if (format == "json")
        out << nlohmann::json{{"first_seed", first_seed}, {"pairs", s.pairs}, {"mean", s.mean}, {"std", s.stddev}}
                   .dump(2)
            << "\n";
      else
        out << "pairs " << s.pairs << ", mean composite " << fixed(s.mean, 6) << ", std " << fixed(s.stddev, 6)
            << "\n";
      return kExitOk;
    }

    if (report_cmd->parsed()) {
      const std::vector<LeaderboardRow> rows = aggregate(fs::path(run_file));
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const LeaderboardRow& r : rows) j.push_back(to_json(r));
        out << j.dump(2) << "\n";
      } else {
        print_table(out, rows);
      }
      return kExitOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const LoadError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const SvgSyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IrError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ManifestError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "no command given\n";
  return kExitUsage;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace blueprint
