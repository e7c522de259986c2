#include "bytesoup/analysis.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "bytesoup/substrate.hpp"

namespace bytesoup {

size_t ZlibCompressor::compressed_size(std::span<const uint8_t> bytes) const {
    uLongf bound = compressBound(static_cast<uLong>(bytes.size()));
    std::vector<uint8_t> out(bound);
    uLongf out_len = bound;
    int rc = compress2(out.data(), &out_len, bytes.data(),
                       static_cast<uLong>(bytes.size()), level_);
    if (rc != Z_OK) throw std::runtime_error("zlib compress2 failed: " + std::to_string(rc));
    return out_len;
}

const Compressor& default_compressor() {
    static ZlibCompressor comp(1);
    return comp;
}

double shannon_entropy(std::span<const uint8_t> bytes) {
    if (bytes.empty()) throw std::invalid_argument("shannon_entropy: empty input");
    std::array<uint64_t, 256> counts{};
    for (uint8_t b : bytes) ++counts[b];
    const double n = static_cast<double>(bytes.size());
    double h = 0.0;
    for (uint64_t c : counts) {
        if (c == 0) continue;
        const double p = c / n;
        h -= p * std::log2(p);
    }
    return h;
}

double high_order_entropy(std::span<const uint8_t> bytes, const Compressor& comp) {
    const double shannon = shannon_entropy(bytes);
    const double compressed = static_cast<double>(comp.compressed_size(bytes));
    return shannon - 8.0 * compressed / static_cast<double>(bytes.size());
}

double high_order_entropy(std::span<const uint8_t> bytes) {
    return high_order_entropy(bytes, default_compressor());
}

TokenStats token_stats(std::span<const uint64_t> tokens) {
    if (tokens.empty()) throw std::invalid_argument("token_stats: tracing disabled");
    std::unordered_map<uint64_t, uint64_t> counts;
    counts.reserve(tokens.size() / 4);
    for (uint64_t t : tokens) {
        if (t != kNoToken) ++counts[t];
    }
    TokenStats stats;
    stats.unique_count = counts.size();
    std::vector<uint64_t> mults;
    mults.reserve(counts.size());
    for (const auto& [token, c] : counts) mults.push_back(c);
    const size_t k = std::min<size_t>(32, mults.size());
    std::partial_sort(mults.begin(), mults.begin() + k, mults.end(),
                      std::greater<uint64_t>());
    for (size_t i = 0; i < k; ++i) stats.top32_count += mults[i];
    return stats;
}

EpochStats compute_epoch_stats(uint32_t epoch, std::span<const uint8_t> bytes,
                               std::span<const uint64_t> tokens,
                               double mean_steps, const Compressor& comp) {
    EpochStats row;
    row.epoch = epoch;
    row.shannon_bits_per_byte = shannon_entropy(bytes);
    row.compressed_size_bytes = comp.compressed_size(bytes);
    row.high_order_entropy = row.shannon_bits_per_byte -
        8.0 * static_cast<double>(row.compressed_size_bytes) /
            static_cast<double>(bytes.size());
    if (!tokens.empty()) {
        TokenStats ts = token_stats(tokens);
        row.unique_token_count = ts.unique_count;
        row.top32_token_count = ts.top32_count;
    }
    row.zero_byte_count = static_cast<uint64_t>(
        std::count(bytes.begin(), bytes.end(), uint8_t{0}));
    row.mean_steps_executed = mean_steps;
    return row;
}

std::optional<uint32_t> detect_transition(const std::vector<EpochStats>& series,
                                          double threshold) {
    for (const EpochStats& row : series) {
        if (row.high_order_entropy >= threshold) return row.epoch;
    }
    return std::nullopt;
}

}  // namespace bytesoup
