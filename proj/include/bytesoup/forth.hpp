#pragma once

#include <array>
#include <cstdint>

#include "bytesoup/substrate.hpp"

namespace bytesoup {

// Circular 64-cell stack of the soup Forth. Pops walk the pointer backwards
// into zero-initialized (or stale) cells, so no stack operation can fail.
struct SoupStack {
    std::array<uint8_t, 64> cells{};
    uint8_t sp = 0;

    uint8_t top() const { return cells[(sp - 1) & 63]; }
    uint8_t top1() const { return cells[(sp - 2) & 63]; }
    void set_top(uint8_t v) { cells[(sp - 1) & 63] = v; }
    void set_top1(uint8_t v) { cells[(sp - 2) & 63] = v; }
    void push(uint8_t v) { cells[sp & 63] = v; sp = (sp + 1) & 63; }
    void pop() { sp = (sp - 1) & 63; }
};

// Bounded stack of the long-tape Forth; reading or popping past either end
// is a halt, the only error this language has.
struct CopyStack {
    std::array<int32_t, 64> cells{};
    uint32_t depth = 0;
};

struct ForthSoupState {
    SoupStack stack;
    int32_t pc = 0;
};

struct ForthCopyState {
    CopyStack stack;
    int64_t pc = 0;
};

bool forth_soup_step(ForthSoupState& state, Tape tape, TokenArray tokens,
                     HaltReason* halt);
bool forth_copy_step(ForthCopyState& state, Tape tape, TokenArray tokens,
                     HaltReason* halt);

ExecReport run_forth_soup(Tape tape, TokenArray tokens, uint64_t budget,
                          ForthSoupState state);
ExecReport run_forth_copy(Tape tape, TokenArray tokens, uint64_t budget,
                          ForthCopyState state);

}  // namespace bytesoup
