#include "bytesoup/longtape.hpp"

#include <atomic>
#include <cstring>
#include <stdexcept>
#include <thread>

#include "bytesoup/analysis.hpp"
#include "bytesoup/bff.hpp"
#include "bytesoup/forth.hpp"

namespace bytesoup {

LongTapeWorld::LongTapeWorld(const Params& params)
    : params_(params),
      start_stream_(params.seed, Stream::kWindowStart),
      mutation_pos_stream_(params.seed, Stream::kMutationMask),
      mutation_val_stream_(params.seed, Stream::kMutationValue) {
    if (params_.tape_len == 0) throw std::invalid_argument("longtape: empty tape");
    tape_.resize(params_.tape_len);
    if (params_.tracing) tokens_.resize(params_.tape_len);
    randomize();
}

void LongTapeWorld::randomize() {
    RngStream init(params_.seed, Stream::kTapeInit);
    for (size_t i = 0; i < tape_.size(); ++i)
        tape_[i] = static_cast<uint8_t>(init.at(i) & 0xFF);
    if (params_.tracing) {
        for (size_t i = 0; i < tape_.size(); ++i)
            tokens_[i] = make_token(0, i, tape_[i]);
    }
}

uint32_t LongTapeWorld::seed_program(std::span<const uint8_t> program,
                                     std::optional<uint32_t> offset) {
    if (program.size() > tape_.size())
        throw std::out_of_range("seed_program: program longer than the tape");
    uint32_t at;
    if (offset) {
        if (*offset + program.size() > tape_.size())
            throw std::out_of_range("seed_program: offset out of range");
        at = *offset;
    } else {
        RngStream pos(params_.seed, Stream::kSeedingPosition);
        at = static_cast<uint32_t>(pos.bounded(tape_.size() - program.size() + 1));
    }
    std::memcpy(tape_.data() + at, program.data(), program.size());
    if (params_.tracing) {
        for (size_t k = 0; k < program.size(); ++k)
            tokens_[at + k] = make_token(0, at + k, program[k]);
    }
    return at;
}

ExecReport LongTapeWorld::run_window_at(uint32_t start_pc) {
    TokenArray toks = params_.tracing ? TokenArray(tokens_) : TokenArray{};
    ExecReport r;
    if (params_.language == LanguageId::kBff) {
        BffState st;
        st.pc = start_pc;
        st.head0 = start_pc;
        st.head1 = (start_pc + params_.bff_head1_offset) % params_.tape_len;
        r = run_bff(tape_, toks, params_.window_budget, st);
    } else {
        r = execute(params_.language, tape_, toks, params_.window_budget, start_pc);
    }
    instructions_executed_ += r.steps_executed;
    mutation_accumulator_ += r.steps_executed;
    ++windows_run_;
    apply_due_mutations();
    return r;
}

ExecReport LongTapeWorld::run_window() {
    const uint32_t start =
        static_cast<uint32_t>(start_stream_.bounded(params_.tape_len));
    return run_window_at(start);
}

void LongTapeWorld::apply_due_mutations() {
    if (!params_.mutation_enabled || params_.mutation_interval == 0) return;
    auto valid = valid_instruction_bytes(params_.language);
    while (mutation_accumulator_ >= params_.mutation_interval) {
        mutation_accumulator_ -= params_.mutation_interval;
        const uint32_t pos =
            static_cast<uint32_t>(mutation_pos_stream_.bounded(params_.tape_len));
        const uint8_t b = valid[mutation_val_stream_.bounded(valid.size())];
        tape_[pos] = b;
        if (params_.tracing)
            tokens_[pos] = make_token(static_cast<uint32_t>(generation_ + 1), pos, b);
        ++mutations_applied_;
    }
}

LongTapeWorld::GenerationStats LongTapeWorld::run_generation(uint64_t windows) {
    const uint64_t before = instructions_executed_;
    for (uint64_t i = 0; i < windows; ++i) run_window();
    ++generation_;
    GenerationStats stats;
    stats.generation = generation_;
    stats.high_order_entropy = high_order_entropy(tape_);
    stats.mean_instructions_per_window =
        windows ? static_cast<double>(instructions_executed_ - before) /
                      static_cast<double>(windows)
                : 0.0;
    stats.mutations_applied = mutations_applied_;
    return stats;
}

void LongTapeWorld::run_windows_unsynced(uint64_t windows, unsigned workers) {
    if (params_.language != LanguageId::kForthCopy)
        throw std::invalid_argument("unsynced mode supports forth-copy only");
    if (params_.tracing)
        throw std::invalid_argument("unsynced mode does not support tracing");
    if (workers <= 1) {
        for (uint64_t i = 0; i < windows; ++i) run_window();
        return;
    }
    std::atomic<uint64_t> instr_total{0};
    std::vector<std::thread> threads;
    const uint64_t per = windows / workers;
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([this, w, per, &instr_total] {
            RngStream starts(params_.seed, Stream::kWindowStart, 1000 + w);
            for (uint64_t i = 0; i < per; ++i) {
                ForthCopyState st;
                st.pc = static_cast<int64_t>(starts.bounded(params_.tape_len));
                ExecReport r =
                    run_forth_copy(tape_, {}, params_.window_budget, st);
                instr_total.fetch_add(r.steps_executed, std::memory_order_relaxed);
            }
        });
    }
    for (auto& t : threads) t.join();
    // Counters are approximate by contract in this mode.
    const uint64_t executed = instr_total.load();
    instructions_executed_ += executed;
    mutation_accumulator_ += executed;
    windows_run_ += per * workers;
    apply_due_mutations();
}

}  // namespace bytesoup
