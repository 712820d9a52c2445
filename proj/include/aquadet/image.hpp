#pragma once

#include <cstdint>
#include <vector>

namespace aquadet {

/// Row-major 8-bit RGB raster. Pixel (x, y) lives at pixels[(y*width + x)*3].
/// Images are immutable values in practice: every operation returns a new buffer,
/// so buffers are safe to share across worker threads.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels;  // width * height * 3

    ImageBuffer() = default;
    ImageBuffer(int w, int h) : width(w), height(h), pixels(static_cast<size_t>(w) * h * 3, 0) {}
    ImageBuffer(int w, int h, uint8_t r, uint8_t g, uint8_t b) : ImageBuffer(w, h) {
        for (size_t i = 0; i < pixels.size(); i += 3) {
            pixels[i] = r;
            pixels[i + 1] = g;
            pixels[i + 2] = b;
        }
    }

    bool valid() const {
        return width >= 1 && height >= 1 &&
               pixels.size() == static_cast<size_t>(width) * height * 3;
    }

    uint8_t* at(int x, int y) { return &pixels[(static_cast<size_t>(y) * width + x) * 3]; }
    const uint8_t* at(int x, int y) const {
        return &pixels[(static_cast<size_t>(y) * width + x) * 3];
    }

    void set(int x, int y, uint8_t r, uint8_t g, uint8_t b) {
        uint8_t* p = at(x, y);
        p[0] = r;
        p[1] = g;
        p[2] = b;
    }

    bool operator==(const ImageBuffer& o) const {
        return width == o.width && height == o.height && pixels == o.pixels;
    }
};

/// Integer pixel rectangle, origin top-left.
struct PixelRect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    bool operator==(const PixelRect& o) const {
        return x == o.x && y == o.y && w == o.w && h == o.h;
    }
};

enum class ColorDirection { rgb_to_hsv, hsv_to_rgb };

/// Bilinear stretch to tw x th, half-pixel-center sampling, round-half-up.
/// Aspect ratio is not preserved. Resizing to the source size is an exact copy.
ImageBuffer resize_stretch(const ImageBuffer& img, int tw, int th);

/// Copies the subrectangle r. Throws OutOfBoundsError if r leaves the image.
ImageBuffer crop_px(const ImageBuffer& img, const PixelRect& r);

/// Hexcone RGB<->HSV with all three channels kept 8-bit; H is hue scaled from
/// 0-360 degrees onto 0-255. The byte-wide hue cannot carry full chroma detail:
/// the round trip is within +-1 per channel for chroma <= 94 and +-3 overall.
ImageBuffer convert_color(const ImageBuffer& img, ColorDirection direction);

/// BT.601 luma, kept 3-channel (R=G=B) so downstream stages see one raster type.
ImageBuffer to_grayscale(const ImageBuffer& img);

/// Luma of a single pixel, same rounding as to_grayscale.
uint8_t gray_value(uint8_t r, uint8_t g, uint8_t b);

// Float-precision HSV helpers (h in degrees [0,360), s and v in [0,255]).
// Used where 8-bit hue quantization would be visible, e.g. small hue shifts.
void rgb_to_hsv_f(uint8_t r, uint8_t g, uint8_t b, double& h, double& s, double& v);
void hsv_to_rgb_f(double h, double s, double v, uint8_t& r, uint8_t& g, uint8_t& b);

}  // namespace aquadet
