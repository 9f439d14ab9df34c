#pragma once

// Pixel classification and raster I/O.
//
// Every pixel of a floor plan is reduced to one of five classes. Files are
// decoded with libpng; alpha is composited over white before classification.

#include <png.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blueprint {

enum class ColorClass : std::uint8_t { White, Black, Green, Red, Other };

inline constexpr int kDefaultTolerance = 48;

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb reference_color(ColorClass c) {
  switch (c) {
    case ColorClass::White: return {255, 255, 255};
    case ColorClass::Black: return {0, 0, 0};
    case ColorClass::Green: return {0, 255, 0};
    case ColorClass::Red: return {255, 0, 0};
    case ColorClass::Other: break;
  }
  return {128, 128, 128};
}

inline constexpr std::string_view to_string(ColorClass c) {
  switch (c) {
    case ColorClass::White: return "white";
    case ColorClass::Black: return "black";
    case ColorClass::Green: return "green";
    case ColorClass::Red: return "red";
    case ColorClass::Other: break;
  }
  return "other";
}

/// Snap an RGB triple to the palette. A class qualifies when every channel
/// is within `tolerance` of its reference color; the nearest qualifying
/// class (max-channel distance) wins, ties going to palette order.
inline constexpr ColorClass classify_color(int r, int g, int b, int tolerance = kDefaultTolerance) {
  constexpr std::array<ColorClass, 4> palette{ColorClass::White, ColorClass::Black,
                                              ColorClass::Green, ColorClass::Red};
  ColorClass best = ColorClass::Other;
  int best_dist = tolerance + 1;
  for (ColorClass c : palette) {
    const Rgb ref = reference_color(c);
    const int d = std::max({r > ref.r ? r - ref.r : ref.r - r, g > ref.g ? g - ref.g : ref.g - g,
                            b > ref.b ? b - ref.b : ref.b - b});
    if (d <= tolerance && d < best_dist) {
      best = c;
      best_dist = d;
    }
  }
  return best;
}

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  // Row-major ordering: y first.
  friend bool operator<(const Point& a, const Point& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  }
};

/// Row-major grid of classified pixels; (x, y) addresses cells[y * width + x].
class PixelGrid {
 public:
  PixelGrid(int width, int height, ColorClass fill = ColorClass::White)
      : width_(width), height_(height) {
    if (width < 1 || height < 1) throw std::invalid_argument("PixelGrid dimensions must be >= 1");
    cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return cells_.size(); }

  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  ColorClass at(int x, int y) const { return cells_[index(x, y)]; }
  ColorClass at(Point p) const { return at(p.x, p.y); }
  void set(int x, int y, ColorClass c) { cells_[index(x, y)] = c; }
  void set(Point p, ColorClass c) { set(p.x, p.y, c); }

  std::span<const ColorClass> cells() const { return cells_; }

  // Set when the source image had any pixel with alpha < 255.
  bool translucent() const { return translucent_; }
  void set_translucent(bool t) { translucent_ = t; }

  friend bool operator==(const PixelGrid& a, const PixelGrid& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.cells_ == b.cells_;
  }

 private:
  int width_;
  int height_;
  std::vector<ColorClass> cells_;
  bool translucent_ = false;
};

enum class LoadErrorCode { MissingFile, Undecodable, ZeroDimension };

class LoadError : public std::runtime_error {
 public:
  LoadError(LoadErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  LoadErrorCode code() const { return code_; }

 private:
  LoadErrorCode code_;
};

namespace detail {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace detail

/// Decoded 8-bit RGBA image.
struct RgbaImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgba;  // width * height * 4
};

// Larger images are rejected as undecodable instead of exhausting memory.
inline constexpr png_uint_32 kMaxImageSide = 16384;

inline RgbaImage decode_png(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw LoadError(LoadErrorCode::MissingFile, "no such file: " + path.string());

  detail::FilePtr file(std::fopen(path.string().c_str(), "rb"));
  if (!file) throw LoadError(LoadErrorCode::MissingFile, "cannot open: " + path.string());

  png_byte header[8] = {};
  if (std::fread(header, 1, 8, file.get()) != 8 || png_sig_cmp(header, 0, 8) != 0)
    throw LoadError(LoadErrorCode::Undecodable, "not a PNG image: " + path.string());

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw LoadError(LoadErrorCode::Undecodable, "libpng initialisation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw LoadError(LoadErrorCode::Undecodable, "libpng initialisation failed");
  }

  RgbaImage img;
  std::vector<png_bytep> rows;
  volatile bool failed = false;
  volatile bool zero = false;
  // libpng reports errors via longjmp; nothing with a destructor is created
  // between setjmp and the reads below.
  if (setjmp(png_jmpbuf(png))) {
    failed = true;
  } else {
    png_init_io(png, file.get());
    png_set_sig_bytes(png, 8);
    png_set_user_limits(png, kMaxImageSide, kMaxImageSide);
    png_read_info(png, info);
    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    if (w == 0 || h == 0) {
      zero = true;
    } else {
      const int bit_depth = png_get_bit_depth(png, info);
      const int color_type = png_get_color_type(png, info);
      if (bit_depth == 16) png_set_strip_16(png);
      if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
      if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
      if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
      if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
      if (!(color_type & PNG_COLOR_MASK_ALPHA) && !png_get_valid(png, info, PNG_INFO_tRNS))
        png_set_filler(png, 0xFF, PNG_FILLER_AFTER);
      png_set_interlace_handling(png);
      png_read_update_info(png, info);
      img.width = static_cast<int>(w);
      img.height = static_cast<int>(h);
      img.rgba.resize(static_cast<std::size_t>(w) * h * 4);
      rows.resize(h);
      for (png_uint_32 y = 0; y < h; ++y) rows[y] = img.rgba.data() + static_cast<std::size_t>(y) * w * 4;
      png_read_image(png, rows.data());
    }
  }
  png_destroy_read_struct(&png, &info, nullptr);
  if (failed) throw LoadError(LoadErrorCode::Undecodable, "corrupt PNG image: " + path.string());
  if (zero) throw LoadError(LoadErrorCode::ZeroDimension, "image has zero width or height: " + path.string());
  return img;
}

inline PixelGrid classify_image(const RgbaImage& img, int tolerance = kDefaultTolerance) {
  if (img.width < 1 || img.height < 1)
    throw LoadError(LoadErrorCode::ZeroDimension, "image has zero width or height");
  PixelGrid grid(img.width, img.height);
  bool translucent = false;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const std::size_t i = (static_cast<std::size_t>(y) * img.width + x) * 4;
      const int a = img.rgba[i + 3];
      if (a < 255) translucent = true;
      // Composite over white: c * a + 255 * (1 - a), rounded.
      auto over_white = [a](int c) { return (c * a + 255 * (255 - a) + 127) / 255; };
      grid.set(x, y, classify_color(over_white(img.rgba[i]), over_white(img.rgba[i + 1]),
                                    over_white(img.rgba[i + 2]), tolerance));
    }
  }
  grid.set_translucent(translucent);
  return grid;
}

/// Load an 8-bit RGB(A) PNG and classify each pixel.
inline PixelGrid load_image(const std::filesystem::path& path, int tolerance = kDefaultTolerance) {
  return classify_image(decode_png(path), tolerance);
}

inline void write_png(const std::filesystem::path& path, const RgbaImage& img) {
  detail::FilePtr file(std::fopen(path.string().c_str(), "wb"));
  if (!file) throw std::runtime_error("cannot write: " + path.string());
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("libpng initialisation failed");
  }
  std::vector<png_bytep> rows(static_cast<std::size_t>(img.height));
  volatile bool failed = false;
  if (setjmp(png_jmpbuf(png))) {
    failed = true;
  } else {
    png_init_io(png, file.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width), static_cast<png_uint_32>(img.height), 8,
                 PNG_COLOR_TYPE_RGBA, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < img.height; ++y)
      rows[y] = const_cast<png_bytep>(img.rgba.data() + static_cast<std::size_t>(y) * img.width * 4);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
  }
  png_destroy_write_struct(&png, &info);
  if (failed) throw std::runtime_error("PNG encoding failed: " + path.string());
}

inline RgbaImage to_rgba(const PixelGrid& grid) {
  RgbaImage img{grid.width(), grid.height(), {}};
  img.rgba.reserve(grid.size() * 4);
  for (ColorClass c : grid.cells()) {
    const Rgb rgb = reference_color(c);
    img.rgba.insert(img.rgba.end(), {rgb.r, rgb.g, rgb.b, 255});
  }
  return img;
}

/// Write a grid using the exact palette colors (Other as mid grey).
inline void save_png(const std::filesystem::path& path, const PixelGrid& grid) {
  write_png(path, to_rgba(grid));
}

}  // namespace blueprint
