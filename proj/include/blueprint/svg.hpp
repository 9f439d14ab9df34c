#pragma once

// Restricted SVG reader and writer.
//
// Accepted elements: svg, g, line, polyline, polygon, rect, circle and path
// (commands M L H V Z, absolute or relative). Groups pass stroke, fill and
// stroke-width down to their children. Anything else is reported in the
// error list and skipped; parsing continues.

#include <blueprint/raster.hpp>
#include <blueprint/vector_plan.hpp>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blueprint {

inline constexpr int kDefaultCanvas = 1000;
inline constexpr double kMaxDotDiameter = 14.0;

enum class SvgErrorCode {
  UnsupportedElement,
  UnsupportedCommand,
  UnsupportedAttribute,
  BadColor,
  OffPaletteColor,
  BadGeometry,
  OversizedCircle,
};

inline constexpr std::string_view to_string(SvgErrorCode c) {
  switch (c) {
    case SvgErrorCode::UnsupportedElement: return "unsupported-element";
    case SvgErrorCode::UnsupportedCommand: return "unsupported-command";
    case SvgErrorCode::UnsupportedAttribute: return "unsupported-attribute";
    case SvgErrorCode::BadColor: return "bad-color";
    case SvgErrorCode::OffPaletteColor: return "off-palette-color";
    case SvgErrorCode::BadGeometry: return "bad-geometry";
    case SvgErrorCode::OversizedCircle: return "oversized-circle";
  }
  return "unknown";
}

struct SvgError {
  SvgErrorCode code;
  std::string element;   // tag name
  std::string location;  // element path, e.g. svg/g[0]/path[2]
  std::string message;
};

struct SvgOptions {
  int tolerance = kDefaultTolerance;
  // Canvas used when the document has neither width/height nor a viewBox.
  int default_width = kDefaultCanvas;
  int default_height = kDefaultCanvas;
};

struct SvgParseResult {
  VectorPlan plan;
  std::vector<SvgError> errors;
};

/// Thrown when the document is not well-formed markup or has no <svg> root.
class SvgSyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace svg_detail {

using boost::property_tree::ptree;

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Plain number or number with a "px" suffix.
inline std::optional<double> parse_length(std::string_view s) {
  s = trim(s);
  if (s.size() > 2 && lower(s.substr(s.size() - 2)) == "px") s.remove_suffix(2);
  return parse_number(s);
}

/// Split a list of numbers separated by whitespace and/or commas.
inline std::optional<std::vector<double>> parse_number_list(std::string_view s) {
  std::vector<double> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != ',') ++j;
    auto v = parse_number(s.substr(i, j - i));
    if (!v) return std::nullopt;
    out.push_back(*v);
    i = j;
  }
  return out;
}

struct Paint {
  bool none = false;
  Rgb rgb;
};

inline std::optional<Paint> parse_paint(std::string_view text) {
  const std::string s = lower(trim(text));
  if (s == "none" || s == "transparent") return Paint{true, {}};
  if (!s.empty() && s[0] == '#') {
    auto hex = [](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      return -1;
    };
    const std::string_view h = std::string_view(s).substr(1);
    for (char c : h)
      if (hex(c) < 0) return std::nullopt;
    if (h.size() == 3)
      return Paint{false, {static_cast<std::uint8_t>(hex(h[0]) * 17), static_cast<std::uint8_t>(hex(h[1]) * 17),
                           static_cast<std::uint8_t>(hex(h[2]) * 17)}};
    if (h.size() == 6)
      return Paint{false,
                   {static_cast<std::uint8_t>(hex(h[0]) * 16 + hex(h[1])),
                    static_cast<std::uint8_t>(hex(h[2]) * 16 + hex(h[3])),
                    static_cast<std::uint8_t>(hex(h[4]) * 16 + hex(h[5]))}};
    return std::nullopt;
  }
  if (s.rfind("rgb(", 0) == 0 && s.back() == ')') {
    std::string_view body = std::string_view(s).substr(4, s.size() - 5);
    int channels[3] = {};
    int n = 0;
    std::size_t i = 0;
    while (i <= body.size() && n < 4) {
      std::size_t j = body.find(',', i);
      if (j == std::string_view::npos) j = body.size();
      std::string_view part = trim(body.substr(i, j - i));
      bool percent = !part.empty() && part.back() == '%';
      if (percent) part.remove_suffix(1);
      auto v = parse_number(part);
      if (!v || n >= 3) return std::nullopt;
      double c = percent ? *v * 255.0 / 100.0 : *v;
      channels[n++] = static_cast<int>(std::lround(std::clamp(c, 0.0, 255.0)));
      i = j + 1;
    }
    if (n != 3) return std::nullopt;
    return Paint{false, {static_cast<std::uint8_t>(channels[0]), static_cast<std::uint8_t>(channels[1]),
                         static_cast<std::uint8_t>(channels[2])}};
  }
  struct Named {
    std::string_view name;
    Rgb rgb;
  };
  // "green" deliberately maps to pure green: submissions use it for doors.
  static constexpr Named kNamed[] = {
      {"black", {0, 0, 0}},         {"white", {255, 255, 255}},   {"red", {255, 0, 0}},
      {"green", {0, 255, 0}},       {"lime", {0, 255, 0}},        {"blue", {0, 0, 255}},
      {"yellow", {255, 255, 0}},    {"gray", {128, 128, 128}},    {"grey", {128, 128, 128}},
      {"silver", {192, 192, 192}},  {"orange", {255, 165, 0}},    {"brown", {165, 42, 42}},
      {"purple", {128, 0, 128}},    {"darkgreen", {0, 100, 0}},   {"darkred", {139, 0, 0}},
      {"lightgray", {211, 211, 211}}, {"lightgrey", {211, 211, 211}}, {"darkgray", {169, 169, 169}},
      {"darkgrey", {169, 169, 169}}, {"cyan", {0, 255, 255}},     {"magenta", {255, 0, 255}},
      {"maroon", {128, 0, 0}},      {"navy", {0, 0, 128}},        {"olive", {128, 128, 0}},
      {"teal", {0, 128, 128}},      {"beige", {245, 245, 220}},   {"tan", {210, 180, 140}},
      {"pink", {255, 192, 203}},
  };
  for (const auto& n : kNamed)
    if (n.name == s) return Paint{false, n.rgb};
  return std::nullopt;
}

struct Style {
  std::optional<std::string> stroke;
  std::optional<std::string> fill;
  std::optional<std::string> stroke_width;
};

// Uniform viewBox mapping: canvas = scale * (user - origin) + offset.
struct ViewTransform {
  double scale = 1.0;
  double ox = 0.0, oy = 0.0;  // user-space origin
  double tx = 0.0, ty = 0.0;  // canvas offset

  Vec2 apply(double x, double y) const { return {scale * (x - ox) + tx, scale * (y - oy) + ty}; }
};

class Parser {
 public:
  explicit Parser(const SvgOptions& opt) : opt_(opt) {}

  SvgParseResult run(std::string_view text) {
    ptree doc;
    try {
      std::istringstream in{std::string(text)};
      boost::property_tree::read_xml(in, doc);
    } catch (const boost::property_tree::xml_parser_error& e) {
      throw SvgSyntaxError(std::string("malformed markup: ") + e.what());
    }
    const ptree* root = nullptr;
    for (const auto& [name, child] : doc) {
      if (name == "svg") {
        root = &child;
        break;
      }
    }
    if (!root) throw SvgSyntaxError("document has no <svg> root element");

    setup_canvas(*root);
    Style base;
    base.fill = "black";
    walk_children(*root, apply_style(*root, base), "svg");
    return std::move(result_);
  }

 private:
  SvgOptions opt_;
  SvgParseResult result_;
  ViewTransform view_;

  static std::optional<std::string> attr(const ptree& node, const char* name) {
    if (auto a = node.get_child_optional("<xmlattr>"))
      if (auto v = a->get_optional<std::string>(name)) return *v;
    return std::nullopt;
  }

  void error(SvgErrorCode code, std::string_view element, const std::string& loc, std::string msg) {
    result_.errors.push_back({code, std::string(element), loc, std::move(msg)});
  }

  void setup_canvas(const ptree& root) {
    std::optional<double> w, h;
    if (auto s = attr(root, "width")) w = parse_length(*s);
    if (auto s = attr(root, "height")) h = parse_length(*s);
    std::optional<std::vector<double>> vb;
    if (auto s = attr(root, "viewBox")) {
      vb = parse_number_list(*s);
      if (!vb || vb->size() != 4 || !((*vb)[2] > 0.0) || !((*vb)[3] > 0.0)) {
        error(SvgErrorCode::BadGeometry, "svg", "svg", "ignoring invalid viewBox");
        vb.reset();
      }
    }
    auto dim = [](std::optional<double> explicit_dim, std::optional<double> from_vb, int fallback) {
      double v = explicit_dim && *explicit_dim >= 1.0 ? *explicit_dim : from_vb ? *from_vb : fallback;
      return std::max(1, static_cast<int>(std::lround(std::min(v, 20000.0))));
    };
    VectorPlan& plan = result_.plan;
    plan.width = dim(w, vb ? std::optional<double>((*vb)[2]) : std::nullopt, opt_.default_width);
    plan.height = dim(h, vb ? std::optional<double>((*vb)[3]) : std::nullopt, opt_.default_height);
    if (vb) {
      const double sx = plan.width / (*vb)[2];
      const double sy = plan.height / (*vb)[3];
      view_.scale = std::min(sx, sy);
      view_.ox = (*vb)[0];
      view_.oy = (*vb)[1];
      view_.tx = (plan.width - view_.scale * (*vb)[2]) / 2.0;
      view_.ty = (plan.height - view_.scale * (*vb)[3]) / 2.0;
    }
  }

  static Style apply_style(const ptree& node, Style inherited) {
    if (auto v = attr(node, "stroke")) inherited.stroke = *v;
    if (auto v = attr(node, "fill")) inherited.fill = *v;
    if (auto v = attr(node, "stroke-width")) inherited.stroke_width = *v;
    if (auto css = attr(node, "style")) {
      std::string_view rest = *css;
      while (!rest.empty()) {
        std::size_t semi = rest.find(';');
        std::string_view decl = rest.substr(0, semi);
        rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
        std::size_t colon = decl.find(':');
        if (colon == std::string_view::npos) continue;
        const std::string key = lower(trim(decl.substr(0, colon)));
        const std::string value(trim(decl.substr(colon + 1)));
        if (key == "stroke") inherited.stroke = value;
        else if (key == "fill") inherited.fill = value;
        else if (key == "stroke-width") inherited.stroke_width = value;
      }
    }
    return inherited;
  }

  // Resolve a paint to a palette class. Returns nullopt when nothing should
  // be painted (none, or an error already recorded).
  std::optional<ColorClass> resolve_paint(const std::optional<std::string>& paint_text, std::string_view element,
                                          const std::string& loc) {
    if (!paint_text) return std::nullopt;
    auto paint = parse_paint(*paint_text);
    if (!paint) {
      error(SvgErrorCode::BadColor, element, loc, "unparseable color '" + *paint_text + "'");
      return std::nullopt;
    }
    if (paint->none) return std::nullopt;
    const ColorClass c = classify_color(paint->rgb.r, paint->rgb.g, paint->rgb.b, opt_.tolerance);
    if (c == ColorClass::Other) {
      error(SvgErrorCode::OffPaletteColor, element, loc, "color '" + *paint_text + "' is outside the palette");
      return std::nullopt;
    }
    return c;
  }

  double stroke_width(const Style& s, std::string_view element, const std::string& loc) {
    if (!s.stroke_width) return view_.scale;
    auto w = parse_length(*s.stroke_width);
    if (!w || *w < 0.0) {
      error(SvgErrorCode::BadGeometry, element, loc, "invalid stroke-width '" + *s.stroke_width + "'");
      return view_.scale;
    }
    return *w * view_.scale;
  }

  void walk_children(const ptree& node, const Style& style, const std::string& path) {
    std::map<std::string, int> counts;
    for (const auto& [name, child] : node) {
      if (name.empty() || name[0] == '<') continue;  // attributes, comments, text
      const std::string loc = path + "/" + name + "[" + std::to_string(counts[name]++) + "]";
      if (name == "title" || name == "desc" || name == "metadata") continue;
      if (attr(child, "transform")) {
        error(SvgErrorCode::UnsupportedAttribute, name, loc, "transform is not supported; element skipped");
        continue;
      }
      const Style s = apply_style(child, style);
      if (name == "g") walk_children(child, s, loc);
      else if (name == "line") on_line(child, s, loc);
      else if (name == "polyline") on_poly(child, s, loc, false);
      else if (name == "polygon") on_poly(child, s, loc, true);
      else if (name == "rect") on_rect(child, s, loc);
      else if (name == "circle") on_circle(child, s, loc);
      else if (name == "path") on_path(child, s, loc);
      else error(SvgErrorCode::UnsupportedElement, name, loc, "element <" + name + "> is not supported");
    }
  }

  std::optional<double> geom(const ptree& node, const char* name, std::string_view element, const std::string& loc,
                             double fallback = 0.0) {
    auto s = attr(node, name);
    if (!s) return fallback;
    auto v = parse_length(*s);
    if (!v) error(SvgErrorCode::BadGeometry, element, loc, std::string("invalid ") + name + " '" + *s + "'");
    return v;
  }

  void add_segment(Vec2 a, Vec2 b, ColorClass c, double w, bool square_caps) {
    if (square_caps) {
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      if (len > 0.0) {
        const double ex = (b.x - a.x) / len * w / 2.0;
        const double ey = (b.y - a.y) / len * w / 2.0;
        a = {a.x - ex, a.y - ey};
        b = {b.x + ex, b.y + ey};
      }
    }
    result_.plan.elements.push_back(VectorElement::segment(a, b, c, w));
  }

  void on_line(const ptree& node, const Style& s, const std::string& loc) {
    auto x1 = geom(node, "x1", "line", loc), y1 = geom(node, "y1", "line", loc);
    auto x2 = geom(node, "x2", "line", loc), y2 = geom(node, "y2", "line", loc);
    if (!x1 || !y1 || !x2 || !y2) return;
    auto color = resolve_paint(s.stroke, "line", loc);
    const double w = stroke_width(s, "line", loc);
    if (!color || !(w > 0.0)) return;
    add_segment(view_.apply(*x1, *y1), view_.apply(*x2, *y2), *color, w, false);
  }

  void on_poly(const ptree& node, const Style& s, const std::string& loc, bool closed) {
    const char* tag = closed ? "polygon" : "polyline";
    auto pts = parse_number_list(attr(node, "points").value_or(""));
    if (!pts || pts->size() % 2 != 0) {
      error(SvgErrorCode::BadGeometry, tag, loc, "invalid points list");
      return;
    }
    auto color = resolve_paint(s.stroke, tag, loc);
    const double w = stroke_width(s, tag, loc);
    if (!color || !(w > 0.0)) return;
    std::vector<Vec2> v;
    for (std::size_t i = 0; i + 1 < pts->size(); i += 2) v.push_back(view_.apply((*pts)[i], (*pts)[i + 1]));
    if (closed && v.size() > 2) v.push_back(v.front());
    for (std::size_t i = 1; i < v.size(); ++i) add_segment(v[i - 1], v[i], *color, w, true);
  }

  void on_rect(const ptree& node, const Style& s, const std::string& loc) {
    auto x = geom(node, "x", "rect", loc), y = geom(node, "y", "rect", loc);
    auto w = geom(node, "width", "rect", loc), h = geom(node, "height", "rect", loc);
    if (!x || !y || !w || !h) return;
    if (*w < 0.0 || *h < 0.0) {
      error(SvgErrorCode::BadGeometry, "rect", loc, "negative rect size");
      return;
    }
    const Vec2 corner = view_.apply(*x, *y);
    const Vec2 extent{*w * view_.scale, *h * view_.scale};
    if (auto fill = resolve_paint(s.fill, "rect", loc))
      result_.plan.elements.push_back(VectorElement::rect(corner, extent, *fill, true));
    auto stroke = resolve_paint(s.stroke, "rect", loc);
    const double sw = stroke_width(s, "rect", loc);
    if (stroke && sw > 0.0) result_.plan.elements.push_back(VectorElement::rect(corner, extent, *stroke, false, sw));
  }

  void on_circle(const ptree& node, const Style& s, const std::string& loc) {
    auto cx = geom(node, "cx", "circle", loc), cy = geom(node, "cy", "circle", loc);
    auto r = geom(node, "r", "circle", loc);
    if (!cx || !cy || !r) return;
    const double diameter = 2.0 * *r * view_.scale;
    if (diameter > kMaxDotDiameter) {
      error(SvgErrorCode::OversizedCircle, "circle", loc,
            "circles are only accepted as room dots (diameter <= 14 px)");
      return;
    }
    auto color = resolve_paint(s.fill, "circle", loc);
    if (!color) color = resolve_paint(s.stroke, "circle", loc);
    if (!color || !(diameter > 0.0)) return;
    result_.plan.elements.push_back(VectorElement::dot(view_.apply(*cx, *cy), diameter, *color));
  }

  void on_path(const ptree& node, const Style& s, const std::string& loc) {
    const std::string d = attr(node, "d").value_or("");
    std::vector<std::pair<Vec2, Vec2>> segs;  // user space
    Vec2 cur, start;
    char cmd = 0;
    std::size_t i = 0;
    auto skip_sep = [&] {
      while (i < d.size() && (std::isspace(static_cast<unsigned char>(d[i])) || d[i] == ',')) ++i;
    };
    auto read_num = [&]() -> std::optional<double> {
      skip_sep();
      std::size_t j = i;
      if (j < d.size() && (d[j] == '-' || d[j] == '+')) ++j;
      bool dot = false, digits = false;
      while (j < d.size() && (std::isdigit(static_cast<unsigned char>(d[j])) || (d[j] == '.' && !dot))) {
        if (d[j] == '.') dot = true;
        else digits = true;
        ++j;
      }
      if (!digits) return std::nullopt;
      if (j < d.size() && (d[j] == 'e' || d[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < d.size() && (d[k] == '-' || d[k] == '+')) ++k;
        if (k < d.size() && std::isdigit(static_cast<unsigned char>(d[k]))) {
          while (k < d.size() && std::isdigit(static_cast<unsigned char>(d[k]))) ++k;
          j = k;
        }
      }
      auto v = parse_number(std::string_view(d).substr(i, j - i));
      i = j;
      return v;
    };
    auto bad = [&](const std::string& msg) { error(SvgErrorCode::BadGeometry, "path", loc, msg); };

    while (true) {
      skip_sep();
      if (i >= d.size()) break;
      if (std::isalpha(static_cast<unsigned char>(d[i]))) {
        cmd = d[i++];
        if (std::string_view("MmLlHhVvZz").find(cmd) == std::string_view::npos) {
          error(SvgErrorCode::UnsupportedCommand, "path", loc,
                std::string("path command '") + cmd + "' is not supported (straight lines only)");
          return;
        }
        if (cmd == 'Z' || cmd == 'z') {
          if (!(cur == start)) segs.emplace_back(cur, start);
          cur = start;
          continue;
        }
      } else if (cmd == 0 || cmd == 'Z' || cmd == 'z') {
        bad("path data must start with a command");
        return;
      }
      const bool rel = std::islower(static_cast<unsigned char>(cmd));
      switch (cmd) {
        case 'M': case 'm': case 'L': case 'l': {
          auto x = read_num();
          auto y = x ? read_num() : std::nullopt;
          if (!x || !y) {
            bad("invalid coordinate in path data");
            return;
          }
          Vec2 p = rel ? Vec2{cur.x + *x, cur.y + *y} : Vec2{*x, *y};
          if (cmd == 'M' || cmd == 'm') {
            start = p;
            cmd = rel ? 'l' : 'L';  // implicit lineto for extra pairs
          } else {
            segs.emplace_back(cur, p);
          }
          cur = p;
          break;
        }
        case 'H': case 'h': case 'V': case 'v': {
          auto v = read_num();
          if (!v) {
            bad("invalid coordinate in path data");
            return;
          }
          Vec2 p = cur;
          if (cmd == 'H') p.x = *v;
          else if (cmd == 'h') p.x += *v;
          else if (cmd == 'V') p.y = *v;
          else p.y += *v;
          segs.emplace_back(cur, p);
          cur = p;
          break;
        }
        default: break;
      }
    }
    auto color = resolve_paint(s.stroke, "path", loc);
    const double w = stroke_width(s, "path", loc);
    if (!color || !(w > 0.0)) return;
    for (const auto& [a, b] : segs) {
      if (a == b) continue;
      add_segment(view_.apply(a.x, a.y), view_.apply(b.x, b.y), *color, w, true);
    }
  }
};

inline std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::to_string(v);
}

inline std::string hex_color(ColorClass c) {
  switch (c) {
    case ColorClass::White: return "#FFFFFF";
    case ColorClass::Black: return "#000000";
    case ColorClass::Green: return "#00FF00";
    case ColorClass::Red: return "#FF0000";
    case ColorClass::Other: break;
  }
  return "#808080";
}

}  // namespace svg_detail

/// Parse a restricted SVG document. Throws SvgSyntaxError on malformed
/// markup; everything else is collected in the returned error list.
inline SvgParseResult parse_svg(std::string_view text, const SvgOptions& opt = {}) {
  return svg_detail::Parser(opt).run(text);
}

/// Serialize a plan so that parse_svg reproduces it element for element.
inline std::string write_svg(const VectorPlan& plan) {
  using svg_detail::format_number;
  using svg_detail::hex_color;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plan.width << "\" height=\"" << plan.height
      << "\" viewBox=\"0 0 " << plan.width << ' ' << plan.height << "\">\n";
  for (const VectorElement& e : plan.elements) {
    switch (e.kind) {
      case ElementKind::Segment:
        out << "  <line x1=\"" << format_number(e.a.x) << "\" y1=\"" << format_number(e.a.y) << "\" x2=\""
            << format_number(e.b.x) << "\" y2=\"" << format_number(e.b.y) << "\" stroke=\"" << hex_color(e.color)
            << "\" stroke-width=\"" << format_number(e.stroke_width) << "\"/>\n";
        break;
      case ElementKind::Dot:
        out << "  <circle cx=\"" << format_number(e.a.x) << "\" cy=\"" << format_number(e.a.y) << "\" r=\""
            << format_number(e.size / 2.0) << "\" fill=\"" << hex_color(e.color) << "\"/>\n";
        break;
      case ElementKind::Rect:
        out << "  <rect x=\"" << format_number(e.a.x) << "\" y=\"" << format_number(e.a.y) << "\" width=\""
            << format_number(e.b.x) << "\" height=\"" << format_number(e.b.y) << '"';
        if (e.filled)
          out << " fill=\"" << hex_color(e.color) << "\"/>\n";
        else
          out << " fill=\"none\" stroke=\"" << hex_color(e.color) << "\" stroke-width=\""
              << format_number(e.stroke_width) << "\"/>\n";
        break;
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace blueprint
