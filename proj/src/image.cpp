#include "slcs/image.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>

#include <png.h>

#include "slcs/errors.hpp"

namespace slcs {

std::string colour_name(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

std::optional<Rgb> parse_colour(const std::string& name) {
  if (name.size() != 7 || name[0] != '#') return std::nullopt;
  auto hex = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    return -1;
  };
  std::array<int, 3> v{};
  for (int i = 0; i < 3; ++i) {
    const int hi = hex(name[1 + 2 * i]), lo = hex(name[2 + 2 * i]);
    if (hi < 0 || lo < 0) return std::nullopt;
    v[i] = hi * 16 + lo;
  }
  return Rgb{static_cast<std::uint8_t>(v[0]), static_cast<std::uint8_t>(v[1]), static_cast<std::uint8_t>(v[2])};
}

namespace {

std::vector<unsigned char> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

Image read_image(const std::filesystem::path& path) {
  const auto bytes = slurp(path);
  static constexpr unsigned char kPng[] = {0x89, 'P', 'N', 'G'};
  if (bytes.size() >= 4 && std::equal(std::begin(kPng), std::end(kPng), bytes.begin())) return read_png(path);
  if (bytes.size() >= 2 && bytes[0] == 'B' && bytes[1] == 'M') return read_bmp(path);
  throw IoError("'" + path.string() + "' is neither PNG nor BMP");
}

Image read_png(const std::filesystem::path& path) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.c_str()))
    throw IoError("cannot read PNG '" + path.string() + "': " + png.message);
  const auto fmt = png.format;
  if (!(fmt & PNG_FORMAT_FLAG_COLOR) || (fmt & PNG_FORMAT_FLAG_COLORMAP) || (fmt & PNG_FORMAT_FLAG_LINEAR)) {
    png_image_free(&png);
    throw IoError("unsupported image depth in '" + path.string() + "': need 8-bit RGB or RGBA");
  }
  png.format = PNG_FORMAT_RGB;
  Image img(png.width, png.height);
  std::vector<png_byte> raw(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, raw.data(), 0, nullptr))
    throw IoError("cannot decode PNG '" + path.string() + "': " + png.message);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) img.pixels[i] = {raw[3 * i], raw[3 * i + 1], raw[3 * i + 2]};
  return img;
}

void write_png(const std::filesystem::path& path, const Image& img) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(img.width);
  png.height = static_cast<png_uint_32>(img.height);
  png.format = PNG_FORMAT_RGB;
  std::vector<png_byte> raw;
  raw.reserve(img.pixels.size() * 3);
  for (const Rgb& c : img.pixels) raw.insert(raw.end(), {c.r, c.g, c.b});
  if (!png_image_write_to_file(&png, path.c_str(), 0, raw.data(), 0, nullptr))
    throw IoError("cannot write PNG '" + path.string() + "': " + png.message);
}

Image read_bmp(const std::filesystem::path& path) {
  const auto b = slurp(path);
  auto u16 = [&](std::size_t o) { return static_cast<std::uint32_t>(b[o] | b[o + 1] << 8); };
  auto u32 = [&](std::size_t o) { return u16(o) | u16(o + 2) << 16; };
  const std::string where = " in '" + path.string() + "'";
  if (b.size() < 54 || b[0] != 'B' || b[1] != 'M') throw IoError("not a BMP file" + where);

  const std::uint32_t data_offset = u32(10);
  const std::uint32_t header_size = u32(14);
  if (header_size < 40) throw IoError("unsupported BMP header" + where);
  const auto width = static_cast<std::int32_t>(u32(18));
  const auto signed_height = static_cast<std::int32_t>(u32(22));
  const std::uint32_t bpp = u16(28);
  const std::uint32_t compression = u32(30);
  if (bpp != 24 && bpp != 32) throw IoError("unsupported image depth" + where + ": need 24- or 32-bit BMP");
  // 32-bit bitfield images are accepted in the common BGRA layout
  if (compression != 0 && !(compression == 3 && bpp == 32)) throw IoError("compressed BMP" + where);
  if (width <= 0 || signed_height == 0) throw IoError("empty BMP" + where);

  const bool top_down = signed_height < 0;
  const std::size_t w = static_cast<std::size_t>(width);
  const std::size_t h = static_cast<std::size_t>(top_down ? -static_cast<std::int64_t>(signed_height) : signed_height);
  const std::size_t stride = (w * bpp / 8 + 3) / 4 * 4;
  if (data_offset + stride * h > b.size()) throw IoError("truncated BMP" + where);

  Image img(w, h);
  for (std::size_t row = 0; row < h; ++row) {
    const std::size_t src_row = top_down ? row : h - 1 - row;
    const unsigned char* p = b.data() + data_offset + src_row * stride;
    for (std::size_t col = 0; col < w; ++col, p += bpp / 8) img.at(row, col) = {p[2], p[1], p[0]};
  }
  return img;
}

}  // namespace slcs
