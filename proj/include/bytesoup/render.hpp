#pragma once

#include <string>

#include "bytesoup/snapshot.hpp"

namespace bytesoup {

// Renders a grid snapshot as a binary PPM (P6). Each 64-byte tape becomes
// one 8x8 pixel block, one byte per pixel in row-major order, so the image
// is (W*8) x (H*8). The palette is fixed: byte 0 is black, instruction and
// data bytes spread over hue-like channels (r = b, g = b*5 mod 256,
// b = b*11 mod 256, each or'd with 0x40 so nonzero bytes are never dark).
// Throws std::invalid_argument unless topology is grid2d and tape_len is 64.
void render_grid_ppm(const Snapshot& snap, const std::string& out_path);

}  // namespace bytesoup
