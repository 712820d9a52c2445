#pragma once

#include <array>
#include <string>
#include <vector>

#include "aquadet/image.hpp"

namespace aquadet {

/// Loads a PNG as 8-bit RGB. Palette images are expanded, 16-bit depth is
/// reduced, alpha is stripped (composited-free: the alpha byte is dropped).
ImageBuffer load_png(const std::string& path);

/// Writes an 8-bit RGB PNG.
void save_png(const ImageBuffer& img, const std::string& path);

/// Writes a paletted (indexed) PNG from per-pixel indices. `palette` supplies
/// one RGB triple per index value; indices must be < palette.size() <= 256.
void save_indexed_png(const std::vector<uint8_t>& indices, int width, int height,
                      const std::vector<std::array<uint8_t, 3>>& palette,
                      const std::string& path);

}  // namespace aquadet
