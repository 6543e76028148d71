#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace slcs {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend auto operator<=>(const Rgb&, const Rgb&) = default;
};

/// Row-major 2D RGB raster; alpha is dropped on load.
struct Image {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Rgb> pixels;

  Image() = default;
  Image(std::size_t w, std::size_t h, Rgb fill = {}) : width(w), height(h), pixels(w * h, fill) {}
  Rgb& at(std::size_t row, std::size_t col) { return pixels[row * width + col]; }
  const Rgb& at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
  friend bool operator==(const Image&, const Image&) = default;
};

/// "#rrggbb", lowercase.
std::string colour_name(Rgb c);
/// Inverse of colour_name; accepts upper- or lowercase hex digits.
std::optional<Rgb> parse_colour(const std::string& name);

/// PNG or BMP, chosen by file signature. Throws IoError on unreadable files
/// and on anything other than 8-bit-per-channel RGB or RGBA.
Image read_image(const std::filesystem::path& path);
Image read_png(const std::filesystem::path& path);
Image read_bmp(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const Image& img);

}  // namespace slcs
