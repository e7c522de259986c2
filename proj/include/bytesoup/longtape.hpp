#pragma once

#include <cstdint>
#include <vector>

#include "bytesoup/rng.hpp"
#include "bytesoup/substrate.hpp"

namespace bytesoup {

// Single shared tape; execution windows start at random positions and run
// until an error or the window budget. Mutation fires once per fixed number
// of executed instructions (a deterministic accumulator, not a coin flip)
// and always draws from the language's valid-instruction byte set.
class LongTapeWorld {
  public:
    struct Params {
        LanguageId language = LanguageId::kForthCopy;
        uint32_t tape_len = 65536;
        uint64_t window_budget = 1000;
        uint64_t mutation_interval = 400000;  // instructions per mutation
        bool mutation_enabled = true;
        uint64_t seed = 0;
        uint32_t bff_head1_offset = 0;  // initial head1 = pc + offset (bff only)
        bool tracing = false;
    };

    explicit LongTapeWorld(const Params& params);

    void randomize();
    // Writes the program at the given offset (or a random one) and returns
    // the offset used.
    uint32_t seed_program(std::span<const uint8_t> program,
                          std::optional<uint32_t> offset = std::nullopt);

    // One window: random start pc, execute, account instructions, apply any
    // mutations that came due.
    ExecReport run_window();
    // A window from an explicit start position (no RNG draw).
    ExecReport run_window_at(uint32_t start_pc);

    struct GenerationStats {
        uint64_t generation = 0;
        double high_order_entropy = 0;
        double mean_instructions_per_window = 0;
        uint64_t mutations_applied = 0;  // cumulative
    };

    // Runs `windows` windows and reports the generation row.
    GenerationStats run_generation(uint64_t windows);

    // Unsynchronized multi-worker mode: workers run windows concurrently on
    // the shared tape with torn reads and writes accepted. Determinism is
    // sacrificed; counters are approximate. Forth-copy only.
    void run_windows_unsynced(uint64_t windows, unsigned workers);

    uint64_t instructions_executed() const { return instructions_executed_; }
    uint64_t mutations_applied() const { return mutations_applied_; }
    uint64_t windows_run() const { return windows_run_; }
    std::span<const uint8_t> tape() const { return tape_; }
    std::span<uint8_t> tape_mut() { return tape_; }
    std::span<const uint64_t> tokens() const { return tokens_; }
    const Params& params() const { return params_; }
    uint64_t generation() const { return generation_; }

  private:
    void apply_due_mutations();

    Params params_;
    std::vector<uint8_t> tape_;
    std::vector<uint64_t> tokens_;
    RngStream start_stream_;
    RngStream mutation_pos_stream_;
    RngStream mutation_val_stream_;
    uint64_t instructions_executed_ = 0;
    uint64_t mutation_accumulator_ = 0;
    uint64_t mutations_applied_ = 0;
    uint64_t windows_run_ = 0;
    uint64_t generation_ = 0;
};

}  // namespace bytesoup
