#include "bytesoup/substrate.hpp"

#include "bytesoup/bff.hpp"
#include "bytesoup/forth.hpp"
#include "bytesoup/subleq.hpp"

namespace bytesoup {

std::string_view language_name(LanguageId lang) {
    switch (lang) {
        case LanguageId::kBff: return "bff";
        case LanguageId::kForthSoup: return "forth-soup";
        case LanguageId::kForthCopy: return "forth-copy";
        case LanguageId::kSubleq: return "subleq";
        case LanguageId::kRsubleq4: return "rsubleq4";
    }
    return "?";
}

std::optional<LanguageId> parse_language(std::string_view name) {
    if (name == "bff") return LanguageId::kBff;
    if (name == "forth-soup") return LanguageId::kForthSoup;
    if (name == "forth-copy") return LanguageId::kForthCopy;
    if (name == "subleq") return LanguageId::kSubleq;
    if (name == "rsubleq4") return LanguageId::kRsubleq4;
    return std::nullopt;
}

std::string_view halt_reason_name(HaltReason reason) {
    switch (reason) {
        case HaltReason::kBudgetExhausted: return "budget_exhausted";
        case HaltReason::kPcOutOfBounds: return "pc_out_of_bounds";
        case HaltReason::kUnmatchedBracket: return "unmatched_bracket";
        case HaltReason::kStackUnderflow: return "stack_underflow";
        case HaltReason::kStackOverflow: return "stack_overflow";
        case HaltReason::kExplicitHalt: return "explicit_halt";
    }
    return "?";
}

ExecReport execute(LanguageId lang, Tape tape, TokenArray tokens, uint64_t budget,
                   uint32_t start_pc) {
    switch (lang) {
        case LanguageId::kBff: {
            BffState st;
            st.pc = start_pc;
            st.head0 = st.head1 = start_pc;
            return run_bff(tape, tokens, budget, st);
        }
        case LanguageId::kForthSoup: {
            ForthSoupState st;
            st.pc = static_cast<int32_t>(start_pc);
            return run_forth_soup(tape, tokens, budget, st);
        }
        case LanguageId::kForthCopy: {
            ForthCopyState st;
            st.pc = start_pc;
            return run_forth_copy(tape, tokens, budget, st);
        }
        case LanguageId::kSubleq: {
            SubleqState st{start_pc};
            return run_subleq(tape, tokens, budget, st);
        }
        case LanguageId::kRsubleq4: {
            SubleqState st{start_pc};
            return run_rsubleq4(tape, tokens, budget, st);
        }
    }
    return {};
}

uint64_t default_budget(LanguageId lang) {
    return lang == LanguageId::kForthCopy ? 1000 : 8192;
}

namespace {
constexpr uint8_t kBffOps[] = {'<', '>', '{', '}', '-', '+', '.', ',', '[', ']'};

constexpr auto make_forth_soup_ops() {
    // 0x00..0x0D plus all literals and jumps; 0x0E..0x3F are no-ops.
    std::array<uint8_t, 14 + 64 + 128> ops{};
    size_t k = 0;
    for (int b = 0x00; b <= 0x0D; ++b) ops[k++] = static_cast<uint8_t>(b);
    for (int b = 0x40; b <= 0xFF; ++b) ops[k++] = static_cast<uint8_t>(b);
    return ops;
}
constexpr auto kForthSoupOps = make_forth_soup_ops();

constexpr auto make_forth_copy_ops() {
    std::array<uint8_t, 0x24> ops{};
    for (int b = 0; b <= 0x23; ++b) ops[b] = static_cast<uint8_t>(b);
    return ops;
}
constexpr auto kForthCopyOps = make_forth_copy_ops();

constexpr auto make_all_bytes() {
    std::array<uint8_t, 256> ops{};
    for (int b = 0; b < 256; ++b) ops[b] = static_cast<uint8_t>(b);
    return ops;
}
constexpr auto kAllBytes = make_all_bytes();
}  // namespace

std::span<const uint8_t> valid_instruction_bytes(LanguageId lang) {
    switch (lang) {
        case LanguageId::kBff: return kBffOps;
        case LanguageId::kForthSoup: return kForthSoupOps;
        case LanguageId::kForthCopy: return kForthCopyOps;
        // Every byte is an operand in the subtract-and-branch languages.
        case LanguageId::kSubleq:
        case LanguageId::kRsubleq4: return kAllBytes;
    }
    return {};
}

}  // namespace bytesoup
