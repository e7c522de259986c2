#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bytesoup/substrate.hpp"

namespace bytesoup {

// The only machine state in either variant is the program counter.
struct SubleqState {
    int64_t pc = 0;
};

bool subleq_step(SubleqState& state, Tape tape, TokenArray tokens, HaltReason* halt);
bool rsubleq4_step(SubleqState& state, Tape tape, TokenArray tokens, HaltReason* halt);

ExecReport run_subleq(Tape tape, TokenArray tokens, uint64_t budget, SubleqState state);
ExecReport run_rsubleq4(Tape tape, TokenArray tokens, uint64_t budget, SubleqState state);

// Space-separated signed-decimal listing format ("9 16 20 4 ... -73").
// Values must fit a signed byte; throws std::invalid_argument otherwise.
std::vector<uint8_t> assemble_subleq(const std::string& text);
std::string disassemble_subleq(std::span<const uint8_t> bytes);

}  // namespace bytesoup
