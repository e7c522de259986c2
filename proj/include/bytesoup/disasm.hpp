#pragma once

#include <span>
#include <string>

#include "bytesoup/substrate.hpp"

namespace bytesoup {

// One mnemonic per byte, space separated, in the notation of the source
// instruction tables (COPY+64, INC, DUP, JUMP +n / JUMP -n, PUSH n, SHIFT n,
// COPY, JNZ, ...). BFF bytes render as their command character or a dot;
// subleq listings render as signed decimals.
std::string disassemble(LanguageId lang, std::span<const uint8_t> bytes);

}  // namespace bytesoup
