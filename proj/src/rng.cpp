#include "bytesoup/rng.hpp"

namespace bytesoup {

namespace {

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

}  // namespace

RngStream::RngStream(uint64_t seed, uint64_t stream_id)
    : base_(mix64(mix64(seed + kGolden) ^ (stream_id * 0xda942042e4dd58b5ull))) {}

RngStream::RngStream(uint64_t seed, Stream stream, uint64_t substream)
    : RngStream(seed, (static_cast<uint64_t>(stream) << 40) ^ substream) {}

uint64_t RngStream::next() { return at(counter_++); }

uint64_t RngStream::at(uint64_t counter) const {
    return mix64(base_ + (counter + 1) * kGolden);
}

uint64_t RngStream::bounded(uint64_t n) {
    // Lemire's multiply-shift with rejection: exact uniformity for any n.
    uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    uint64_t lo = static_cast<uint64_t>(m);
    if (lo < n) {
        uint64_t threshold = (0 - n) % n;
        while (lo < threshold) {
            x = next();
            m = static_cast<__uint128_t>(x) * n;
            lo = static_cast<uint64_t>(m);
        }
    }
    return static_cast<uint64_t>(m >> 64);
}

std::vector<uint32_t> rng_shuffle(RngStream& stream, uint32_t n) {
    std::vector<uint32_t> perm(n);
    for (uint32_t i = 0; i < n; ++i) perm[i] = i;
    for (uint32_t i = n - 1; i > 0; --i) {
        uint32_t j = static_cast<uint32_t>(stream.bounded(i + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

}  // namespace bytesoup
