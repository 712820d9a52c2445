#include "aquadet/image.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aquadet/errors.hpp"

namespace aquadet {

namespace {

inline uint8_t round_half_up(double v) {
    double r = std::floor(v + 0.5);
    return static_cast<uint8_t>(std::clamp(r, 0.0, 255.0));
}

}  // namespace

ImageBuffer resize_stretch(const ImageBuffer& img, int tw, int th) {
    if (tw < 1 || th < 1) throw OutOfBoundsError("resize_stretch: target must be >= 1x1");
    if (tw == img.width && th == img.height) return img;

    ImageBuffer out(tw, th);
    const double sx = static_cast<double>(img.width) / tw;
    const double sy = static_cast<double>(img.height) / th;

    for (int y = 0; y < th; ++y) {
        double src_y = (y + 0.5) * sy - 0.5;
        src_y = std::clamp(src_y, 0.0, static_cast<double>(img.height - 1));
        int y0 = static_cast<int>(std::floor(src_y));
        int y1 = std::min(y0 + 1, img.height - 1);
        double fy = src_y - y0;

        for (int x = 0; x < tw; ++x) {
            double src_x = (x + 0.5) * sx - 0.5;
            src_x = std::clamp(src_x, 0.0, static_cast<double>(img.width - 1));
            int x0 = static_cast<int>(std::floor(src_x));
            int x1 = std::min(x0 + 1, img.width - 1);
            double fx = src_x - x0;

            const uint8_t* p00 = img.at(x0, y0);
            const uint8_t* p10 = img.at(x1, y0);
            const uint8_t* p01 = img.at(x0, y1);
            const uint8_t* p11 = img.at(x1, y1);
            uint8_t* dst = out.at(x, y);
            for (int c = 0; c < 3; ++c) {
                double top = p00[c] + (p10[c] - p00[c]) * fx;
                double bot = p01[c] + (p11[c] - p01[c]) * fx;
                dst[c] = round_half_up(top + (bot - top) * fy);
            }
        }
    }
    return out;
}

ImageBuffer crop_px(const ImageBuffer& img, const PixelRect& r) {
    if (r.w < 1 || r.h < 1 || r.x < 0 || r.y < 0 || r.x + r.w > img.width ||
        r.y + r.h > img.height) {
        std::ostringstream os;
        os << "crop_px: rect (" << r.x << "," << r.y << "," << r.w << "," << r.h
           << ") outside " << img.width << "x" << img.height << " image";
        throw OutOfBoundsError(os.str());
    }
    ImageBuffer out(r.w, r.h);
    for (int y = 0; y < r.h; ++y) {
        const uint8_t* src = img.at(r.x, r.y + y);
        std::copy(src, src + static_cast<size_t>(r.w) * 3, out.at(0, y));
    }
    return out;
}

void rgb_to_hsv_f(uint8_t r, uint8_t g, uint8_t b, double& h, double& s, double& v) {
    double rd = r, gd = g, bd = b;
    double mx = std::max({rd, gd, bd});
    double mn = std::min({rd, gd, bd});
    double c = mx - mn;

    if (c == 0.0) {
        h = 0.0;
    } else if (mx == rd) {
        h = std::fmod(60.0 * ((gd - bd) / c) + 360.0, 360.0);
    } else if (mx == gd) {
        h = 60.0 * ((bd - rd) / c) + 120.0;
    } else {
        h = 60.0 * ((rd - gd) / c) + 240.0;
    }
    s = mx > 0.0 ? 255.0 * c / mx : 0.0;
    v = mx;
}

void hsv_to_rgb_f(double h, double s, double v, uint8_t& r, uint8_t& g, uint8_t& b) {
    h = std::fmod(std::fmod(h, 360.0) + 360.0, 360.0);
    double sv = std::clamp(s, 0.0, 255.0) / 255.0;
    double val = std::clamp(v, 0.0, 255.0);
    double c = val * sv;
    double hp = h / 60.0;
    double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double m = val - c;

    double rp = 0, gp = 0, bp = 0;
    switch (static_cast<int>(hp) % 6) {
        case 0: rp = c; gp = x; break;
        case 1: rp = x; gp = c; break;
        case 2: gp = c; bp = x; break;
        case 3: gp = x; bp = c; break;
        case 4: rp = x; bp = c; break;
        default: rp = c; bp = x; break;
    }
    r = round_half_up(rp + m);
    g = round_half_up(gp + m);
    b = round_half_up(bp + m);
}

ImageBuffer convert_color(const ImageBuffer& img, ColorDirection direction) {
    ImageBuffer out(img.width, img.height);
    const size_t n = img.pixels.size();
    for (size_t i = 0; i < n; i += 3) {
        if (direction == ColorDirection::rgb_to_hsv) {
            double h, s, v;
            rgb_to_hsv_f(img.pixels[i], img.pixels[i + 1], img.pixels[i + 2], h, s, v);
            out.pixels[i] = round_half_up(h * 255.0 / 360.0);
            out.pixels[i + 1] = round_half_up(s);
            out.pixels[i + 2] = round_half_up(v);
        } else {
            double h = img.pixels[i] * 360.0 / 255.0;
            hsv_to_rgb_f(h, img.pixels[i + 1], img.pixels[i + 2], out.pixels[i],
                         out.pixels[i + 1], out.pixels[i + 2]);
        }
    }
    return out;
}

uint8_t gray_value(uint8_t r, uint8_t g, uint8_t b) {
    return round_half_up(0.299 * r + 0.587 * g + 0.114 * b);
}

ImageBuffer to_grayscale(const ImageBuffer& img) {
    ImageBuffer out(img.width, img.height);
    const size_t n = img.pixels.size();
    for (size_t i = 0; i < n; i += 3) {
        uint8_t y = gray_value(img.pixels[i], img.pixels[i + 1], img.pixels[i + 2]);
        out.pixels[i] = out.pixels[i + 1] = out.pixels[i + 2] = y;
    }
    return out;
}

}  // namespace aquadet
