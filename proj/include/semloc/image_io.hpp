#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace semloc {

/// 8-bit single-channel raster, row-major, row 0 first.
struct ImageU8 {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> pixels;

  uint8_t at(int col, int row) const { return pixels[static_cast<size_t>(row) * width + col]; }
  uint8_t& at(int col, int row) { return pixels[static_cast<size_t>(row) * width + col]; }
};

/// 8-bit interleaved RGB raster.
struct ImageRGB8 {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> pixels;  // 3 bytes per pixel

  void set(int col, int row, uint8_t r, uint8_t g, uint8_t b) {
    const size_t i = 3 * (static_cast<size_t>(row) * width + col);
    pixels[i] = r;
    pixels[i + 1] = g;
    pixels[i + 2] = b;
  }
};

ImageU8 make_image_u8(int width, int height, uint8_t fill = 0);
ImageRGB8 make_image_rgb8(int width, int height, uint8_t r = 255, uint8_t g = 255, uint8_t b = 255);

/// Reads a greyscale image; dispatches on extension (.pgm or .png).
/// PNG inputs are converted to 8-bit grey (palette/colour expanded then averaged).
ImageU8 read_image_gray(const std::string& path);

void write_pgm(const std::string& path, const ImageU8& img);
ImageU8 read_pgm(const std::string& path);

void write_png_gray8(const std::string& path, const ImageU8& img);
void write_png_gray16(const std::string& path, int width, int height,
                      const std::vector<uint16_t>& pixels);
void write_png_rgb8(const std::string& path, const ImageRGB8& img);
std::vector<uint8_t> encode_png_rgb8(const ImageRGB8& img);
ImageU8 read_png_gray8(const std::string& path);

}  // namespace semloc
