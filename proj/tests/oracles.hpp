// Reference interpreters used only by tests: straight transliterations of
// the source instruction tables, written independently of the library's
// dispatch loops. Slow and simple on purpose.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

struct Result {
    uint64_t steps = 0;
    std::string reason;  // matches bytesoup halt reason names
};

inline Result ref_bff(std::vector<uint8_t>& tape, uint64_t budget, int64_t pc = 0,
                      int64_t h0 = 0, int64_t h1 = 0) {
    const int64_t L = static_cast<int64_t>(tape.size());
    uint64_t steps = 0;
    auto modL = [L](int64_t x) { return ((x % L) + L) % L; };
    while (steps < budget) {
        if (pc < 0 || pc >= L) return {steps, "pc_out_of_bounds"};
        const char op = static_cast<char>(tape[pc]);
        ++steps;
        if (op == '<') { h0 = modL(h0 - 1); }
        else if (op == '>') { h0 = modL(h0 + 1); }
        else if (op == '{') { h1 = modL(h1 - 1); }
        else if (op == '}') { h1 = modL(h1 + 1); }
        else if (op == '-') { tape[h0] = static_cast<uint8_t>(tape[h0] - 1); }
        else if (op == '+') { tape[h0] = static_cast<uint8_t>(tape[h0] + 1); }
        else if (op == '.') { tape[h1] = tape[h0]; }
        else if (op == ',') { tape[h0] = tape[h1]; }
        else if (op == '[') {
            if (tape[h0] == 0) {
                int depth = 0;
                int64_t i = pc;
                for (; i < L; ++i) {
                    if (tape[i] == '[') ++depth;
                    else if (tape[i] == ']' && --depth == 0) break;
                }
                if (i >= L) return {steps, "unmatched_bracket"};
                pc = i;
            }
        } else if (op == ']') {
            if (tape[h0] != 0) {
                int depth = 0;
                int64_t i = pc;
                for (; i >= 0; --i) {
                    if (tape[i] == ']') ++depth;
                    else if (tape[i] == '[' && --depth == 0) break;
                }
                if (i < 0) return {steps, "unmatched_bracket"};
                pc = i;
            }
        }
        ++pc;
    }
    return {steps, "budget_exhausted"};
}

inline Result ref_forth_soup(std::vector<uint8_t>& tape, uint64_t budget,
                             int64_t pc = 0) {
    uint8_t cells[64] = {};
    int sp = 0;
    uint64_t steps = 0;
    auto top = [&]() { return cells[(sp + 63) % 64]; };
    auto top1 = [&]() { return cells[(sp + 62) % 64]; };
    auto set_top = [&](int v) { cells[(sp + 63) % 64] = static_cast<uint8_t>(v); };
    auto set_top1 = [&](int v) { cells[(sp + 62) % 64] = static_cast<uint8_t>(v); };
    auto push = [&](int v) {
        cells[sp % 64] = static_cast<uint8_t>(v);
        sp = (sp + 1) % 64;
    };
    auto pop = [&]() { sp = (sp + 63) % 64; };
    while (steps < budget) {
        if (pc < 0 || pc >= 128) return {steps, "pc_out_of_bounds"};
        const uint8_t op = tape[pc];
        ++steps;
        if (op >= 0x80) {
            pc += (op & 0x40) ? -((op & 0x3F) + 1) : ((op & 0x3F) + 1);
            continue;
        }
        if (op >= 0x40) { push(op & 0x3F); ++pc; continue; }
        switch (op) {
            case 0x00: set_top(tape[top() % 64]); break;
            case 0x01: set_top(tape[top() % 64 + 64]); break;
            case 0x02: tape[top() % 64] = top1(); pop(); pop(); break;
            case 0x03: tape[top() % 64 + 64] = top1(); pop(); pop(); break;
            case 0x04: push(top()); break;
            case 0x05: pop(); break;
            case 0x06: { int a = top(), b = top1(); set_top(b); set_top1(a); break; }
            case 0x07: if (top() != 0) ++pc; break;
            case 0x08: set_top(top() + 1); break;
            case 0x09: set_top(top() - 1); break;
            case 0x0A: set_top1(top() + top1()); pop(); break;
            case 0x0B: set_top1(top() - top1()); pop(); break;
            case 0x0C: tape[top() % 64 + 64] = tape[top() % 64]; pop(); break;
            case 0x0D: tape[top() % 64] = tape[top() % 64 + 64]; pop(); break;
            default: break;
        }
        ++pc;
    }
    return {steps, "budget_exhausted"};
}

inline Result ref_forth_copy(std::vector<uint8_t>& tape, uint64_t budget,
                             int64_t pc = 0) {
    const int64_t L = static_cast<int64_t>(tape.size());
    std::vector<int64_t> stack;
    uint64_t steps = 0;
    auto wrap = [L](int64_t x) { return ((x % L) + L) % L; };
    while (steps < budget) {
        if (pc < 0 || pc >= L) return {steps, "pc_out_of_bounds"};
        const uint8_t op = tape[pc];
        ++steps;
        const int64_t base = pc + 1;
        if (op <= 0x0F) {
            if (stack.size() >= 64) return {steps, "stack_overflow"};
            int v = op & 0xF;
            stack.push_back(v >= 8 ? v - 16 : v);
            ++pc;
        } else if (op <= 0x1F) {
            if (stack.empty()) return {steps, "stack_underflow"};
            stack.back() = (stack.back() << 4) + (op & 0xF);
            ++pc;
        } else if (op == 0x20) {
            if (stack.size() < 2) return {steps, "stack_underflow"};
            int64_t t = stack[stack.size() - 1], t1 = stack[stack.size() - 2];
            tape[wrap(base + t1 + t)] = tape[wrap(base + t1)];
            stack.pop_back();
            ++pc;
        } else if (op == 0x21) {
            if (stack.empty()) return {steps, "stack_underflow"};
            ++stack.back();
            ++pc;
        } else if (op == 0x22) {
            if (stack.empty()) return {steps, "stack_underflow"};
            --stack.back();
            ++pc;
        } else if (op == 0x23) {
            if (stack.size() < 2) return {steps, "stack_underflow"};
            int64_t t = stack[stack.size() - 1], t1 = stack[stack.size() - 2];
            stack.pop_back();
            stack.pop_back();
            pc = (t != 0) ? base + t1 : pc + 1;
        } else {
            ++pc;
        }
    }
    return {steps, "budget_exhausted"};
}

inline int sgn8(uint8_t b) { return b >= 128 ? static_cast<int>(b) - 256 : b; }

inline Result ref_subleq(std::vector<uint8_t>& tape, uint64_t budget, int64_t pc = 0) {
    const int64_t L = static_cast<int64_t>(tape.size());
    uint64_t steps = 0;
    while (steps < budget) {
        if (pc < 0 || pc + 2 >= L) return {steps, "pc_out_of_bounds"};
        const int a = sgn8(tape[pc]), b = sgn8(tape[pc + 1]), c = sgn8(tape[pc + 2]);
        ++steps;
        if (a < 0 || a >= L || b < 0 || b >= L) return {steps, "pc_out_of_bounds"};
        tape[a] = static_cast<uint8_t>(tape[a] - tape[b]);
        pc = sgn8(tape[a]) <= 0 ? c : pc + 3;
    }
    return {steps, "budget_exhausted"};
}

inline Result ref_rsubleq4(std::vector<uint8_t>& tape, uint64_t budget,
                           int64_t pc = 0) {
    const int64_t L = static_cast<int64_t>(tape.size());
    uint64_t steps = 0;
    while (steps < budget) {
        if (pc < 0 || pc + 3 >= L) return {steps, "pc_out_of_bounds"};
        const int64_t a = pc + sgn8(tape[pc]);
        const int64_t b = pc + sgn8(tape[pc + 1]);
        const int64_t c = pc + sgn8(tape[pc + 2]);
        const int d = sgn8(tape[pc + 3]);
        ++steps;
        if (a < 0 || a >= L || b < 0 || b >= L || c < 0 || c >= L)
            return {steps, "pc_out_of_bounds"};
        tape[a] = static_cast<uint8_t>(tape[b] - tape[c]);
        pc = sgn8(tape[a]) <= 0 ? pc + d : pc + 4;
    }
    return {steps, "budget_exhausted"};
}

}  // namespace oracle
