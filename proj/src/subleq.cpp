#include "bytesoup/subleq.hpp"

#include <sstream>
#include <stdexcept>

namespace bytesoup {

namespace {

inline int32_t sgn(uint8_t b) { return static_cast<int8_t>(b); }

// *a -= *b; if (*a <= 0) goto c; subtraction wraps mod 256, the test reads
// the signed interpretation of the result byte. Any out-of-bounds operand
// address or pc halts.
template <bool kTraced>
ExecReport run_subleq_impl(Tape tape, TokenArray tokens, uint64_t budget,
                           SubleqState& st) {
    const int64_t len = static_cast<int64_t>(tape.size());
    uint64_t steps = 0;
    while (steps < budget) {
        if (st.pc < 0 || st.pc + 2 >= len) return {steps, HaltReason::kPcOutOfBounds};
        const int32_t a = sgn(tape[st.pc]);
        const int32_t b = sgn(tape[st.pc + 1]);
        const int32_t c = sgn(tape[st.pc + 2]);
        ++steps;
        if (a < 0 || a >= len || b < 0 || b >= len)
            return {steps, HaltReason::kPcOutOfBounds};
        tape[a] = static_cast<uint8_t>(tape[a] - tape[b]);
        if constexpr (kTraced) tokens[a] = kNoToken;
        st.pc = sgn(tape[a]) <= 0 ? c : st.pc + 3;
    }
    return {steps, HaltReason::kBudgetExhausted};
}

// *(pc+a) = *(pc+b) - *(pc+c); test reads the freshly written cell.
template <bool kTraced>
ExecReport run_rsubleq4_impl(Tape tape, TokenArray tokens, uint64_t budget,
                             SubleqState& st) {
    const int64_t len = static_cast<int64_t>(tape.size());
    uint64_t steps = 0;
    while (steps < budget) {
        if (st.pc < 0 || st.pc + 3 >= len) return {steps, HaltReason::kPcOutOfBounds};
        const int64_t a = st.pc + sgn(tape[st.pc]);
        const int64_t b = st.pc + sgn(tape[st.pc + 1]);
        const int64_t c = st.pc + sgn(tape[st.pc + 2]);
        const int32_t d = sgn(tape[st.pc + 3]);
        ++steps;
        if (a < 0 || a >= len || b < 0 || b >= len || c < 0 || c >= len)
            return {steps, HaltReason::kPcOutOfBounds};
        tape[a] = static_cast<uint8_t>(tape[b] - tape[c]);
        if constexpr (kTraced) tokens[a] = kNoToken;
        st.pc = sgn(tape[a]) <= 0 ? st.pc + d : st.pc + 4;
    }
    return {steps, HaltReason::kBudgetExhausted};
}

}  // namespace

bool subleq_step(SubleqState& state, Tape tape, TokenArray tokens, HaltReason* halt) {
    ExecReport r = tokens.empty() ? run_subleq_impl<false>(tape, tokens, 1, state)
                                  : run_subleq_impl<true>(tape, tokens, 1, state);
    *halt = r.halt_reason;
    return r.halt_reason == HaltReason::kBudgetExhausted;
}

bool rsubleq4_step(SubleqState& state, Tape tape, TokenArray tokens, HaltReason* halt) {
    ExecReport r = tokens.empty() ? run_rsubleq4_impl<false>(tape, tokens, 1, state)
                                  : run_rsubleq4_impl<true>(tape, tokens, 1, state);
    *halt = r.halt_reason;
    return r.halt_reason == HaltReason::kBudgetExhausted;
}

ExecReport run_subleq(Tape tape, TokenArray tokens, uint64_t budget, SubleqState state) {
    return tokens.empty() ? run_subleq_impl<false>(tape, tokens, budget, state)
                          : run_subleq_impl<true>(tape, tokens, budget, state);
}

ExecReport run_rsubleq4(Tape tape, TokenArray tokens, uint64_t budget, SubleqState state) {
    return tokens.empty() ? run_rsubleq4_impl<false>(tape, tokens, budget, state)
                          : run_rsubleq4_impl<true>(tape, tokens, budget, state);
}

std::vector<uint8_t> assemble_subleq(const std::string& text) {
    std::vector<uint8_t> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {  // comment to end of line
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        size_t pos = 0;
        long v;
        try {
            v = std::stol(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad token in listing: " + tok);
        }
        if (pos != tok.size() || v < -128 || v > 255)
            throw std::invalid_argument("value out of byte range: " + tok);
        out.push_back(static_cast<uint8_t>(v & 0xFF));
    }
    return out;
}

std::string disassemble_subleq(std::span<const uint8_t> bytes) {
    std::string out;
    for (size_t i = 0; i < bytes.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(static_cast<int>(static_cast<int8_t>(bytes[i])));
    }
    return out;
}

}  // namespace bytesoup
