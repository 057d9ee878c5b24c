#include "scismm/pgm.hpp"

#include <cctype>
#include <limits>

namespace scismm {

namespace {

constexpr std::size_t kMaxPixels = 1u << 26;

struct Cursor {
  const std::string& data;
  std::size_t pos = 0;

  bool eof() const { return pos >= data.size(); }
  char peek() const { return data[pos]; }

  // Advances past whitespace and '#' comments; returns false at end of input.
  bool skip_separators() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        return true;
      }
    }
    return false;
  }

  std::uint64_t read_number(const char* what) {
    if (!skip_separators() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw MalformedHeader(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > std::numeric_limits<std::uint32_t>::max())
        throw MalformedHeader(std::string("oversized ") + what);
      ++pos;
    }
    return v;
  }
};

}  // namespace

PgmImage pgm_read(const std::string& bytes) {
  Cursor cur{bytes};
  if (!cur.skip_separators()) throw MalformedHeader("empty input");
  if (bytes.size() - cur.pos < 2) throw MalformedHeader("missing magic");
  const char m0 = bytes[cur.pos], m1 = bytes[cur.pos + 1];
  if (m0 != 'P' || (m1 != '3' && m1 != '5'))
    throw MalformedHeader("unknown magic; expected P3 or P5");
  const bool binary = m1 == '5';
  cur.pos += 2;

  const std::uint64_t width = cur.read_number("width");
  const std::uint64_t height = cur.read_number("height");
  const std::uint64_t maxval = cur.read_number("maxval");
  if (width == 0 || height == 0) throw MalformedHeader("zero dimension");
  if (maxval != PgmImage::kMaxval)
    throw UnsupportedMaxval("only maxval 255 is supported");
  const std::uint64_t count = width * height;
  if (count > kMaxPixels) throw MalformedHeader("image too large");

  PgmImage img;
  img.width = static_cast<std::uint32_t>(width);
  img.height = static_cast<std::uint32_t>(height);
  img.pixels.reserve(count);

  if (binary) {
    if (cur.eof() || !std::isspace(static_cast<unsigned char>(cur.peek())))
      throw MalformedHeader("missing separator before pixel data");
    ++cur.pos;  // exactly one whitespace byte between header and raster
    if (bytes.size() - cur.pos < count)
      throw TruncatedPixelData("raster shorter than width * height");
    for (std::uint64_t i = 0; i < count; ++i)
      img.pixels.push_back(static_cast<std::uint8_t>(bytes[cur.pos + i]));
  } else {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (!cur.skip_separators())
        throw TruncatedPixelData("fewer gray values than width * height");
      if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
        throw MalformedHeader("expected gray value");
      std::uint64_t v = cur.read_number("gray value");
      if (v > maxval) throw MalformedHeader("gray value exceeds maxval");
      img.pixels.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return img;
}

std::string pgm_write(const PgmImage& img) {
  if (img.width == 0 || img.height == 0 ||
      img.pixels.size() != static_cast<std::size_t>(img.width) * img.height)
    throw InvalidParameter("image dimensions do not match the pixel count");
  std::string out = "P5 " + std::to_string(img.width) + " " +
                    std::to_string(img.height) + " 255\n";
  out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
  return out;
}

}  // namespace scismm
