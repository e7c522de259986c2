#pragma once

#include <cstdint>
#include <vector>

namespace bytesoup {

// Named RNG streams. Every random decision in a run is drawn from its own
// stream so that the decision is independent of execution order and worker
// count.
enum class Stream : uint64_t {
    kShuffle = 1,          // well-mixed pairing permutation
    kMutationMask = 2,     // per-byte mutate/keep draws
    kMutationValue = 3,    // replacement byte values
    kPairingOrder = 4,     // grid iteration order and neighbor picks
    kSeedingPosition = 5,  // random placement of seeded replicators
    kSoupInit = 6,         // initial soup contents
    kWindowStart = 7,      // long-tape window start positions
    kTapeInit = 8,         // long-tape initial contents
};

// Counter-based generator: output i is a pure function of
// (seed, stream_id, i). Identical inputs give identical outputs on every
// platform, and streams with distinct ids are independent.
class RngStream {
  public:
    RngStream(uint64_t seed, uint64_t stream_id);
    RngStream(uint64_t seed, Stream stream, uint64_t substream = 0);

    // Next value in sequence.
    uint64_t next();
    // Random access without disturbing the sequence position.
    uint64_t at(uint64_t counter) const;

    // Unbiased value in [0, n). n >= 1.
    uint64_t bounded(uint64_t n);

    uint64_t counter() const { return counter_; }

  private:
    uint64_t base_;
    uint64_t counter_ = 0;
};

// Unbiased Fisher-Yates permutation of 0..n-1 drawn from the stream.
std::vector<uint32_t> rng_shuffle(RngStream& stream, uint32_t n);

}  // namespace bytesoup
