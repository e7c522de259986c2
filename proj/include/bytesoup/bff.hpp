#pragma once

#include "bytesoup/substrate.hpp"

namespace bytesoup {

// Machine state of the extended-Brainfuck interpreter. The instruction
// pointer and both heads address the same tape; heads wrap modulo the tape
// length, the pc does not (leaving the tape halts).
struct BffState {
    int64_t pc = 0;
    uint32_t head0 = 0;
    uint32_t head1 = 0;
};

// Executes a single fetched instruction. Returns true to continue, false
// when a halt condition fired (reason written to *halt).
bool bff_step(BffState& state, Tape tape, TokenArray tokens, HaltReason* halt);

ExecReport run_bff(Tape tape, TokenArray tokens, uint64_t budget, BffState state);

}  // namespace bytesoup
