#include "bytesoup/forth.hpp"

namespace bytesoup {

namespace {

// Memory operands address the 128-byte pair view: *<top> is byte (top mod 64)
// in the first half, the +64 forms address the second half.

template <bool kTraced>
ExecReport run_soup_impl(Tape tape, TokenArray tokens, uint64_t budget,
                         ForthSoupState& st) {
    SoupStack& s = st.stack;
    uint64_t steps = 0;
    while (steps < budget) {
        if (st.pc < 0 || st.pc >= 128) return {steps, HaltReason::kPcOutOfBounds};
        const uint8_t op = tape[st.pc];
        ++steps;
        if (op >= 0x80) {
            // 1Xxxxxxx: pc +/- (xxxxxx+1) relative to the jump's own address.
            const int32_t off = (op & 0x3F) + 1;
            st.pc += (op & 0x40) ? -off : off;
            continue;
        }
        if (op >= 0x40) {
            s.push(op & 0x3F);
            ++st.pc;
            continue;
        }
        switch (op) {
            case 0x00: s.set_top(tape[s.top() & 63]); break;
            case 0x01: s.set_top(tape[(s.top() & 63) + 64]); break;
            case 0x02: {
                const uint32_t addr = s.top() & 63;
                tape[addr] = s.top1();
                if constexpr (kTraced) tokens[addr] = kNoToken;
                s.pop();
                s.pop();
                break;
            }
            case 0x03: {
                const uint32_t addr = (s.top() & 63) + 64;
                tape[addr] = s.top1();
                if constexpr (kTraced) tokens[addr] = kNoToken;
                s.pop();
                s.pop();
                break;
            }
            case 0x04: s.push(s.top()); break;
            case 0x05: s.pop(); break;
            case 0x06: {
                const uint8_t a = s.top(), b = s.top1();
                s.set_top(b);
                s.set_top1(a);
                break;
            }
            case 0x07:
                if (s.top() != 0) ++st.pc;
                break;
            case 0x08: s.set_top(s.top() + 1); break;
            case 0x09: s.set_top(s.top() - 1); break;
            case 0x0A: s.set_top1(s.top() + s.top1()); s.pop(); break;
            case 0x0B: s.set_top1(s.top() - s.top1()); s.pop(); break;
            case 0x0C: {
                const uint32_t src = s.top() & 63;
                tape[src + 64] = tape[src];
                if constexpr (kTraced) tokens[src + 64] = tokens[src];
                s.pop();
                break;
            }
            case 0x0D: {
                const uint32_t dst = s.top() & 63;
                tape[dst] = tape[dst + 64];
                if constexpr (kTraced) tokens[dst] = tokens[dst + 64];
                s.pop();
                break;
            }
            default: break;  // 0x0E..0x3F are no-ops
        }
        ++st.pc;
    }
    return {steps, HaltReason::kBudgetExhausted};
}

inline int32_t sign_extend4(uint8_t nibble) {
    return nibble >= 8 ? static_cast<int32_t>(nibble) - 16 : nibble;
}

// All control and memory offsets are relative to the address of the
// instruction FOLLOWING the current one; addresses reduce modulo the tape
// length.
template <bool kTraced>
ExecReport run_copy_impl(Tape tape, TokenArray tokens, uint64_t budget,
                         ForthCopyState& st) {
    const int64_t len = static_cast<int64_t>(tape.size());
    CopyStack& s = st.stack;
    uint64_t steps = 0;
    auto wrap = [len](int64_t a) {
        a %= len;
        return a < 0 ? a + len : a;
    };
    while (steps < budget) {
        if (st.pc < 0 || st.pc >= len) return {steps, HaltReason::kPcOutOfBounds};
        const uint8_t op = tape[st.pc];
        ++steps;
        const int64_t base = st.pc + 1;
        if (op <= 0x0F) {
            if (s.depth >= s.cells.size()) return {steps, HaltReason::kStackOverflow};
            s.cells[s.depth++] = sign_extend4(op);
            ++st.pc;
        } else if (op <= 0x1F) {
            if (s.depth < 1) return {steps, HaltReason::kStackUnderflow};
            s.cells[s.depth - 1] = (s.cells[s.depth - 1] << 4) + (op & 0xF);
            ++st.pc;
        } else if (op == 0x20) {  // COPY
            if (s.depth < 2) return {steps, HaltReason::kStackUnderflow};
            const int32_t t = s.cells[s.depth - 1];
            const int32_t t1 = s.cells[s.depth - 2];
            const int64_t src = wrap(base + t1);
            const int64_t dst = wrap(base + t1 + t);
            tape[dst] = tape[src];
            if constexpr (kTraced) tokens[dst] = tokens[src];
            --s.depth;
            ++st.pc;
        } else if (op == 0x21) {  // INC
            if (s.depth < 1) return {steps, HaltReason::kStackUnderflow};
            ++s.cells[s.depth - 1];
            ++st.pc;
        } else if (op == 0x22) {  // DEC
            if (s.depth < 1) return {steps, HaltReason::kStackUnderflow};
            --s.cells[s.depth - 1];
            ++st.pc;
        } else if (op == 0x23) {  // JNZ: pops 2 whether or not it jumps
            if (s.depth < 2) return {steps, HaltReason::kStackUnderflow};
            const int32_t t = s.cells[s.depth - 1];
            const int32_t t1 = s.cells[s.depth - 2];
            s.depth -= 2;
            st.pc = (t != 0) ? base + t1 : st.pc + 1;
        } else {
            ++st.pc;  // no-op
        }
    }
    return {steps, HaltReason::kBudgetExhausted};
}

}  // namespace

bool forth_soup_step(ForthSoupState& state, Tape tape, TokenArray tokens,
                     HaltReason* halt) {
    ExecReport r = tokens.empty() ? run_soup_impl<false>(tape, tokens, 1, state)
                                  : run_soup_impl<true>(tape, tokens, 1, state);
    *halt = r.halt_reason;
    return r.halt_reason == HaltReason::kBudgetExhausted;
}

bool forth_copy_step(ForthCopyState& state, Tape tape, TokenArray tokens,
                     HaltReason* halt) {
    ExecReport r = tokens.empty() ? run_copy_impl<false>(tape, tokens, 1, state)
                                  : run_copy_impl<true>(tape, tokens, 1, state);
    *halt = r.halt_reason;
    return r.halt_reason == HaltReason::kBudgetExhausted;
}

ExecReport run_forth_soup(Tape tape, TokenArray tokens, uint64_t budget,
                          ForthSoupState state) {
    return tokens.empty() ? run_soup_impl<false>(tape, tokens, budget, state)
                          : run_soup_impl<true>(tape, tokens, budget, state);
}

ExecReport run_forth_copy(Tape tape, TokenArray tokens, uint64_t budget,
                          ForthCopyState state) {
    return tokens.empty() ? run_copy_impl<false>(tape, tokens, budget, state)
                          : run_copy_impl<true>(tape, tokens, budget, state);
}

}  // namespace bytesoup
