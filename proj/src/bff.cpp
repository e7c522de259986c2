#include "bytesoup/bff.hpp"

namespace bytesoup {

namespace {

// Nesting-aware bracket scans. Every non-bracket byte is transparent.
// Returns -1 when no match exists.
int64_t match_forward(Tape tape, int64_t from) {
    int depth = 0;
    for (int64_t i = from; i < static_cast<int64_t>(tape.size()); ++i) {
        if (tape[i] == '[') ++depth;
        else if (tape[i] == ']' && --depth == 0) return i;
    }
    return -1;
}

int64_t match_backward(Tape tape, int64_t from) {
    int depth = 0;
    for (int64_t i = from; i >= 0; --i) {
        if (tape[i] == ']') ++depth;
        else if (tape[i] == '[' && --depth == 0) return i;
    }
    return -1;
}

template <bool kTraced>
ExecReport run_impl(Tape tape, TokenArray tokens, uint64_t budget, BffState& st) {
    const uint32_t len = static_cast<uint32_t>(tape.size());
    uint64_t steps = 0;
    while (steps < budget) {
        if (st.pc < 0 || st.pc >= len) return {steps, HaltReason::kPcOutOfBounds};
        const uint8_t op = tape[st.pc];
        ++steps;
        switch (op) {
            case '<': st.head0 = st.head0 == 0 ? len - 1 : st.head0 - 1; break;
            case '>': st.head0 = st.head0 + 1 == len ? 0 : st.head0 + 1; break;
            case '{': st.head1 = st.head1 == 0 ? len - 1 : st.head1 - 1; break;
            case '}': st.head1 = st.head1 + 1 == len ? 0 : st.head1 + 1; break;
            case '-':
                tape[st.head0] = static_cast<uint8_t>(tape[st.head0] - 1);
                if constexpr (kTraced)
                    tokens[st.head0] = token_with_char(tokens[st.head0], tape[st.head0]);
                break;
            case '+':
                tape[st.head0] = static_cast<uint8_t>(tape[st.head0] + 1);
                if constexpr (kTraced)
                    tokens[st.head0] = token_with_char(tokens[st.head0], tape[st.head0]);
                break;
            case '.':
                tape[st.head1] = tape[st.head0];
                if constexpr (kTraced) tokens[st.head1] = tokens[st.head0];
                break;
            case ',':
                tape[st.head0] = tape[st.head1];
                if constexpr (kTraced) tokens[st.head0] = tokens[st.head1];
                break;
            case '[':
                if (tape[st.head0] == 0) {
                    int64_t m = match_forward(tape, st.pc);
                    if (m < 0) return {steps, HaltReason::kUnmatchedBracket};
                    st.pc = m;  // +1 below lands one past the match
                }
                break;
            case ']':
                if (tape[st.head0] != 0) {
                    int64_t m = match_backward(tape, st.pc);
                    if (m < 0) return {steps, HaltReason::kUnmatchedBracket};
                    st.pc = m;
                }
                break;
            default: break;  // every other byte is data
        }
        ++st.pc;
    }
    return {steps, HaltReason::kBudgetExhausted};
}

}  // namespace

bool bff_step(BffState& state, Tape tape, TokenArray tokens, HaltReason* halt) {
    ExecReport r = tokens.empty() ? run_impl<false>(tape, tokens, 1, state)
                                  : run_impl<true>(tape, tokens, 1, state);
    *halt = r.halt_reason;
    return r.halt_reason == HaltReason::kBudgetExhausted;
}

ExecReport run_bff(Tape tape, TokenArray tokens, uint64_t budget, BffState state) {
    return tokens.empty() ? run_impl<false>(tape, tokens, budget, state)
                          : run_impl<true>(tape, tokens, budget, state);
}

}  // namespace bytesoup
