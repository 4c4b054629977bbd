#include "semloc/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace semloc {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

ImageU8 make_image_u8(int width, int height, uint8_t fill) {
  ImageU8 img;
  img.width = width;
  img.height = height;
  img.pixels.assign(static_cast<size_t>(width) * height, fill);
  return img;
}

ImageRGB8 make_image_rgb8(int width, int height, uint8_t r, uint8_t g, uint8_t b) {
  ImageRGB8 img;
  img.width = width;
  img.height = height;
  img.pixels.resize(3 * static_cast<size_t>(width) * height);
  for (size_t i = 0; i < img.pixels.size(); i += 3) {
    img.pixels[i] = r;
    img.pixels[i + 1] = g;
    img.pixels[i + 2] = b;
  }
  return img;
}

void write_pgm(const std::string& path, const ImageU8& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open for writing");
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
  if (!out) fail(path, "write failed");
}

ImageU8 read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open");
  std::string magic;
  in >> magic;
  if (magic != "P5" && magic != "P2") fail(path, "not a PGM file (magic " + magic + ")");

  auto next_token = [&]() -> long {
    // Skips whitespace and '#' comment lines between header tokens.
    while (true) {
      int c = in.peek();
      if (c == '#') {
        std::string line;
        std::getline(in, line);
      } else if (std::isspace(c)) {
        in.get();
      } else {
        break;
      }
    }
    long v = -1;
    in >> v;
    return v;
  };

  const long w = next_token();
  const long h = next_token();
  const long maxval = next_token();
  if (!in || w <= 0 || h <= 0 || maxval <= 0 || maxval > 255)
    fail(path, "bad PGM header");

  ImageU8 img = make_image_u8(static_cast<int>(w), static_cast<int>(h));
  if (magic == "P5") {
    in.get();  // single whitespace after maxval
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size()))
      fail(path, "truncated PGM data");
  } else {
    for (auto& px : img.pixels) {
      long v;
      in >> v;
      if (!in || v < 0 || v > maxval) fail(path, "bad PGM sample");
      px = static_cast<uint8_t>(v);
    }
  }
  return img;
}

namespace {

void write_png_impl(const std::string& path, int width, int height, int bit_depth,
                    int color_type, const std::vector<png_bytep>& rows) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) fail(path, "cannot open for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail(path, "png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    fail(path, "png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(path, "libpng write error");
  }
  png_init_io(png, fp.get());
  // Fixed settings keep output bytes reproducible across runs.
  png_set_compression_level(png, 6);
  png_set_filter(png, 0, PNG_FILTER_NONE);
  png_set_IHDR(png, info, width, height, bit_depth, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  if (bit_depth == 16) png_set_swap(png);  // in-memory little-endian -> network order
  png_write_image(png, const_cast<png_bytepp>(rows.data()));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace

void write_png_gray8(const std::string& path, const ImageU8& img) {
  std::vector<png_bytep> rows(img.height);
  std::vector<uint8_t> pixels = img.pixels;
  for (int r = 0; r < img.height; ++r)
    rows[r] = pixels.data() + static_cast<size_t>(r) * img.width;
  write_png_impl(path, img.width, img.height, 8, PNG_COLOR_TYPE_GRAY, rows);
}

void write_png_gray16(const std::string& path, int width, int height,
                      const std::vector<uint16_t>& pixels) {
  if (pixels.size() != static_cast<size_t>(width) * height)
    fail(path, "pixel buffer size mismatch");
  std::vector<uint16_t> copy = pixels;
  std::vector<png_bytep> rows(height);
  for (int r = 0; r < height; ++r)
    rows[r] = reinterpret_cast<png_bytep>(copy.data() + static_cast<size_t>(r) * width);
  write_png_impl(path, width, height, 16, PNG_COLOR_TYPE_GRAY, rows);
}

void write_png_rgb8(const std::string& path, const ImageRGB8& img) {
  std::vector<uint8_t> pixels = img.pixels;
  std::vector<png_bytep> rows(img.height);
  for (int r = 0; r < img.height; ++r)
    rows[r] = pixels.data() + 3 * static_cast<size_t>(r) * img.width;
  write_png_impl(path, img.width, img.height, 8, PNG_COLOR_TYPE_RGB, rows);
}

std::vector<uint8_t> encode_png_rgb8(const ImageRGB8& img) {
  // libpng's user-write callback collects into memory.
  struct Sink {
    std::vector<uint8_t> bytes;
  } sink;

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("libpng encode error");
  }
  png_set_write_fn(
      png, &sink,
      [](png_structp p, png_bytep data, png_size_t len) {
        auto* s = static_cast<Sink*>(png_get_io_ptr(p));
        s->bytes.insert(s->bytes.end(), data, data + len);
      },
      nullptr);
  png_set_compression_level(png, 6);
  png_set_filter(png, 0, PNG_FILTER_NONE);
  png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  std::vector<uint8_t> pixels = img.pixels;
  for (int r = 0; r < img.height; ++r)
    png_write_row(png, pixels.data() + 3 * static_cast<size_t>(r) * img.width);
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return std::move(sink.bytes);
}

ImageU8 read_png_gray8(const std::string& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) fail(path, "cannot open");

  uint8_t header[8];
  if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8))
    fail(path, "not a PNG file");

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail(path, "png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    fail(path, "png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "libpng read error");
  }
  png_init_io(png, fp.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  // Normalise everything to 8-bit grey.
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  if (png_get_color_type(png, info) == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (png_get_color_type(png, info) & PNG_COLOR_MASK_COLOR)
    png_set_rgb_to_gray(png, 1, -1.0, -1.0);
  if (png_get_bit_depth(png, info) < 8) png_set_expand_gray_1_2_4_to_8(png);
  png_read_update_info(png, info);

  const int w = static_cast<int>(png_get_image_width(png, info));
  const int h = static_cast<int>(png_get_image_height(png, info));
  ImageU8 img = make_image_u8(w, h);
  std::vector<png_bytep> rows(h);
  for (int r = 0; r < h; ++r)
    rows[r] = img.pixels.data() + static_cast<size_t>(r) * w;
  png_read_image(png, rows.data());
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

ImageU8 read_image_gray(const std::string& path) {
  if (ends_with(path, ".png") || ends_with(path, ".PNG")) return read_png_gray8(path);
  return read_pgm(path);
}

}  // namespace semloc
