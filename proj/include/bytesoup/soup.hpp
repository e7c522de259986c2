#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bytesoup/rng.hpp"
#include "bytesoup/substrate.hpp"

namespace bytesoup {

enum class Topology : uint8_t {
    kWellMixed = 0,
    kGrid2d = 1,
    kLongTape = 2,
};

std::string_view topology_name(Topology t);
std::optional<Topology> parse_topology(std::string_view name);

// Per-byte per-epoch probability of replacement with a uniform random byte.
struct MutationPolicy {
    double rate = 0.00024;
    bool enabled = true;

    uint64_t threshold() const;  // rate mapped onto the full u64 range
};

// Aggregate of one epoch's pair executions.
struct EpochSummary {
    uint64_t pairs = 0;
    uint64_t total_steps = 0;
    uint64_t halts_by_reason[6] = {};

    double mean_steps() const {
        return pairs ? static_cast<double>(total_steps) / static_cast<double>(pairs) : 0.0;
    }
};

// A population of fixed-length tapes interacting by concatenate-execute-
// split. No programs are created or destroyed; change happens only through
// self-modification and background mutation.
class Soup {
  public:
    struct Params {
        LanguageId language = LanguageId::kBff;
        Topology topology = Topology::kWellMixed;
        uint32_t num_programs = 1u << 17;  // well-mixed population
        uint32_t grid_w = 240, grid_h = 135;
        uint32_t tape_len = 64;
        uint64_t budget = 0;  // 0 = language default
        MutationPolicy mutation;
        uint64_t seed = 0;
        bool tracing = false;
        bool fixed_shuffle = false;  // pairing pattern independent of the seed
        bool grid_torus = false;     // default clips the neighborhood at edges
    };

    explicit Soup(const Params& params);

    // Fills every tape with uniform random bytes and assigns fresh epoch-0
    // tokens when tracing.
    void randomize();

    // Writes the program at offset 0 of the chosen tape (random placement
    // draws from the dedicated stream). Returns the tape index used.
    // Throws std::out_of_range for a bad explicit index or an oversized
    // program.
    uint32_t seed_replicator(std::span<const uint8_t> program,
                             std::optional<uint32_t> explicit_index = std::nullopt);

    // One epoch: pair, concatenate-execute-split, then mutate. `workers`
    // only changes wall time, never the result.
    EpochSummary run_epoch(unsigned workers = 1);

    uint32_t epoch() const { return epoch_; }
    uint32_t num_programs() const { return num_programs_; }
    uint32_t tape_len() const { return params_.tape_len; }
    const Params& params() const { return params_; }
    std::span<const uint8_t> bytes() const { return bytes_; }
    std::span<uint8_t> bytes_mut() { return bytes_; }
    std::span<const uint64_t> tokens() const { return tokens_; }
    std::span<uint64_t> tokens_mut() { return tokens_; }

    void set_epoch(uint32_t e) { epoch_ = e; }

  private:
    void execute_pairs(const std::vector<std::pair<uint32_t, uint32_t>>& pairs,
                       unsigned workers, EpochSummary& summary);
    void mutate_all();
    std::vector<std::pair<uint32_t, uint32_t>> pair_well_mixed();
    std::vector<std::pair<uint32_t, uint32_t>> pair_grid2d();

    Params params_;
    uint32_t num_programs_;
    uint64_t budget_;
    uint32_t epoch_ = 0;
    std::vector<uint8_t> bytes_;
    std::vector<uint64_t> tokens_;
};

}  // namespace bytesoup
