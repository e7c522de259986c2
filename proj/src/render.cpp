#include "bytesoup/render.hpp"

#include <fstream>
#include <stdexcept>

namespace bytesoup {

void render_grid_ppm(const Snapshot& snap, const std::string& out_path) {
    if (snap.topology != Topology::kGrid2d)
        throw std::invalid_argument("render2d: snapshot is not a 2d grid");
    if (snap.tape_len != 64)
        throw std::invalid_argument("render2d: requires 64-byte tapes");
    const uint32_t w = snap.width, h = snap.height;
    const uint32_t img_w = w * 8, img_h = h * 8;
    std::vector<uint8_t> pixels(static_cast<size_t>(img_w) * img_h * 3);
    for (uint32_t gy = 0; gy < h; ++gy) {
        for (uint32_t gx = 0; gx < w; ++gx) {
            const uint8_t* tape =
                snap.bytes.data() + (static_cast<size_t>(gy) * w + gx) * 64;
            for (uint32_t k = 0; k < 64; ++k) {
                const uint8_t b = tape[k];
                const uint32_t px = gx * 8 + (k % 8);
                const uint32_t py = gy * 8 + (k / 8);
                uint8_t* p = pixels.data() + (static_cast<size_t>(py) * img_w + px) * 3;
                if (b == 0) {
                    p[0] = p[1] = p[2] = 0;
                } else {
                    p[0] = static_cast<uint8_t>(b | 0x40);
                    p[1] = static_cast<uint8_t>((b * 5) | 0x40);
                    p[2] = static_cast<uint8_t>((b * 11) | 0x40);
                }
            }
        }
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
    out << "P6\n" << img_w << " " << img_h << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels.data()),
              static_cast<std::streamsize>(pixels.size()));
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

}  // namespace bytesoup
