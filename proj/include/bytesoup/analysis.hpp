#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bytesoup {

// Deterministic compressor behind the complexity metric. Identical input
// must yield an identical compressed size; the name tags every stats row so
// numbers are only compared within one configuration.
class Compressor {
  public:
    virtual ~Compressor() = default;
    virtual std::string name() const = 0;
    virtual size_t compressed_size(std::span<const uint8_t> bytes) const = 0;
};

// zlib deflate at a fixed quality level.
class ZlibCompressor : public Compressor {
  public:
    explicit ZlibCompressor(int level = 1) : level_(level) {}
    std::string name() const override { return "zlib-q" + std::to_string(level_); }
    size_t compressed_size(std::span<const uint8_t> bytes) const override;

  private:
    int level_;
};

const Compressor& default_compressor();

// Shannon entropy over byte frequencies, in bits per byte. Throws
// std::invalid_argument on empty input.
double shannon_entropy(std::span<const uint8_t> bytes);

// shannon - 8 * compressed_size / n. May be negative (compressor overhead);
// reported as-is.
double high_order_entropy(std::span<const uint8_t> bytes, const Compressor& comp);
double high_order_entropy(std::span<const uint8_t> bytes);

struct TokenStats {
    uint64_t unique_count = 0;
    uint64_t top32_count = 0;
};

// Distinct token values and the summed multiplicity of the 32 most frequent
// ones. Positions holding kNoToken are not counted. Throws
// std::invalid_argument when the array is empty (tracing disabled).
TokenStats token_stats(std::span<const uint64_t> tokens);

// One analytics row per sampled epoch.
struct EpochStats {
    uint32_t epoch = 0;
    double shannon_bits_per_byte = 0;
    uint64_t compressed_size_bytes = 0;
    double high_order_entropy = 0;
    uint64_t unique_token_count = 0;
    uint64_t top32_token_count = 0;
    uint64_t zero_byte_count = 0;
    double mean_steps_executed = 0;
};

EpochStats compute_epoch_stats(uint32_t epoch, std::span<const uint8_t> bytes,
                               std::span<const uint64_t> tokens,
                               double mean_steps, const Compressor& comp);

// First epoch whose high-order entropy reaches the threshold, if any.
// The series must be ordered by epoch.
std::optional<uint32_t> detect_transition(const std::vector<EpochStats>& series,
                                          double threshold = 1.0);

}  // namespace bytesoup
