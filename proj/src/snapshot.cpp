#include "bytesoup/snapshot.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace bytesoup {

namespace {

constexpr char kMagic[6] = {'R', 'S', 'O', 'U', 'P', '1'};

void put_u32(std::ostream& out, uint32_t v) {
    uint8_t b[4] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8),
                    static_cast<uint8_t>(v >> 16), static_cast<uint8_t>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& out, uint64_t v) {
    put_u32(out, static_cast<uint32_t>(v));
    put_u32(out, static_cast<uint32_t>(v >> 32));
}

uint32_t get_u32(std::istream& in) {
    uint8_t b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
           (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

uint64_t get_u64(std::istream& in) {
    uint64_t lo = get_u32(in);
    uint64_t hi = get_u32(in);
    return lo | (hi << 32);
}

}  // namespace

void write_snapshot(const std::string& path, const Snapshot& snap) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(kMagic, sizeof(kMagic));
    out.put(static_cast<char>(snap.language));
    out.put(static_cast<char>(snap.topology));
    put_u32(out, snap.width);
    put_u32(out, snap.height);
    put_u32(out, snap.tape_len);
    put_u32(out, snap.epoch);
    put_u64(out, snap.seed);
    out.put(snap.tokens.empty() ? 0 : 1);
    out.write(reinterpret_cast<const char*>(snap.bytes.data()),
              static_cast<std::streamsize>(snap.bytes.size()));
    for (uint64_t t : snap.tokens) put_u64(out, t);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    char magic[6];
    in.read(magic, 6);
    if (!in || std::memcmp(magic, kMagic, 6) != 0)
        throw std::runtime_error("not a snapshot file: " + path);
    Snapshot snap;
    snap.language = static_cast<LanguageId>(in.get());
    snap.topology = static_cast<Topology>(in.get());
    snap.width = get_u32(in);
    snap.height = get_u32(in);
    snap.tape_len = get_u32(in);
    snap.epoch = get_u32(in);
    snap.seed = get_u64(in);
    const bool has_tokens = in.get() != 0;
    const size_t total = static_cast<size_t>(snap.width) * snap.height * snap.tape_len;
    snap.bytes.resize(total);
    in.read(reinterpret_cast<char*>(snap.bytes.data()),
            static_cast<std::streamsize>(total));
    if (has_tokens) {
        snap.tokens.resize(total);
        for (size_t i = 0; i < total; ++i) snap.tokens[i] = get_u64(in);
    }
    if (!in) throw std::runtime_error("truncated snapshot: " + path);
    return snap;
}

Snapshot snapshot_of(const Soup& soup) {
    Snapshot snap;
    const auto& p = soup.params();
    snap.language = p.language;
    snap.topology = p.topology;
    if (p.topology == Topology::kGrid2d) {
        snap.width = p.grid_w;
        snap.height = p.grid_h;
    } else {
        snap.width = soup.num_programs();
        snap.height = 1;
    }
    snap.tape_len = p.tape_len;
    snap.epoch = soup.epoch();
    snap.seed = p.seed;
    snap.bytes.assign(soup.bytes().begin(), soup.bytes().end());
    snap.tokens.assign(soup.tokens().begin(), soup.tokens().end());
    return snap;
}

}  // namespace bytesoup
