#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace bytesoup {

// A tape is a fixed-length byte array; code and data share it. Soup tapes
// are 64 bytes, a concatenated pair executes as a 128-byte view, and the
// long-tape world defaults to 65,536 bytes.
using Tape = std::span<uint8_t>;

enum class LanguageId : uint8_t {
    kBff = 0,
    kForthSoup = 1,
    kForthCopy = 2,
    kSubleq = 3,
    kRsubleq4 = 4,
};

std::string_view language_name(LanguageId lang);
std::optional<LanguageId> parse_language(std::string_view name);

enum class HaltReason : uint8_t {
    kBudgetExhausted = 0,
    kPcOutOfBounds = 1,
    kUnmatchedBracket = 2,
    kStackUnderflow = 3,
    kStackOverflow = 4,
    kExplicitHalt = 5,
};

std::string_view halt_reason_name(HaltReason reason);

struct ExecReport {
    uint64_t steps_executed = 0;
    HaltReason halt_reason = HaltReason::kBudgetExhausted;
};

// Tracer tokens: (epoch, position, char) packed into 64 bits as
// epoch[63:40] position[39:8] char[7:0]. A position with no token holds
// kNoToken (a displaced token leaves nothing behind).
using TokenArray = std::span<uint64_t>;

constexpr uint64_t kNoToken = ~0ull;

constexpr uint64_t make_token(uint32_t epoch, uint64_t position, uint8_t ch) {
    return (static_cast<uint64_t>(epoch & 0xFFFFFF) << 40) |
           ((position & 0xFFFFFFFFull) << 8) | ch;
}
constexpr uint32_t token_epoch(uint64_t t) { return static_cast<uint32_t>(t >> 40); }
constexpr uint64_t token_position(uint64_t t) { return (t >> 8) & 0xFFFFFFFFull; }
constexpr uint8_t token_char(uint64_t t) { return static_cast<uint8_t>(t); }
constexpr uint64_t token_with_char(uint64_t t, uint8_t ch) {
    return t == kNoToken ? kNoToken : ((t & ~0xFFull) | ch);
}

// Runs one program to completion under the step budget. The tape (and the
// token array, when nonempty) is mutated in place. All abnormal conditions
// are normal terminations reported through halt_reason. Tokens follow copy
// semantics: copy instructions move tokens with the byte, +1/-1 update only
// the char sub-field, any other write displaces the destination token.
ExecReport execute(LanguageId lang, Tape tape, TokenArray tokens, uint64_t budget,
                   uint32_t start_pc);

// Per-interaction budgets from the source experiments.
uint64_t default_budget(LanguageId lang);

// The non-no-op opcode byte set of a language, used by long-tape mutation
// ("1 random mutation to a new valid instruction").
std::span<const uint8_t> valid_instruction_bytes(LanguageId lang);

}  // namespace bytesoup
