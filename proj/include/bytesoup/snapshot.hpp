#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bytesoup/soup.hpp"
#include "bytesoup/substrate.hpp"

namespace bytesoup {

// Snapshot container: magic "RSOUP1", then language, topology, width,
// height, tape length, epoch, seed, token flag, followed by raw program
// bytes and the optional raw token array. All integers little-endian.
// Well-mixed soups store N as width with height 1; the long tape stores a
// single program of its full length.
struct Snapshot {
    LanguageId language = LanguageId::kBff;
    Topology topology = Topology::kWellMixed;
    uint32_t width = 0;
    uint32_t height = 1;
    uint32_t tape_len = 64;
    uint32_t epoch = 0;
    uint64_t seed = 0;
    std::vector<uint8_t> bytes;
    std::vector<uint64_t> tokens;  // empty when tracing was off

    uint32_t num_programs() const { return width * height; }
};

void write_snapshot(const std::string& path, const Snapshot& snap);
Snapshot read_snapshot(const std::string& path);

Snapshot snapshot_of(const Soup& soup);

}  // namespace bytesoup
