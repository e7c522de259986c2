#include "bytesoup/disasm.hpp"

#include "bytesoup/subleq.hpp"

namespace bytesoup {

namespace {

std::string forth_soup_mnemonic(uint8_t op) {
    if (op >= 0x80) {
        int off = (op & 0x3F) + 1;
        return (op & 0x40) ? "JUMP -" + std::to_string(off)
                           : "JUMP +" + std::to_string(off);
    }
    if (op >= 0x40) return "PUSH " + std::to_string(op & 0x3F);
    switch (op) {
        case 0x00: return "READ";
        case 0x01: return "READ+64";
        case 0x02: return "WRITE";
        case 0x03: return "WRITE+64";
        case 0x04: return "DUP";
        case 0x05: return "POP";
        case 0x06: return "SWAP";
        case 0x07: return "SKIPNZ";
        case 0x08: return "INC";
        case 0x09: return "DEC";
        case 0x0A: return "ADD";
        case 0x0B: return "SUB";
        case 0x0C: return "COPY+64";
        case 0x0D: return "COPY-64";
        default: return "NOP";
    }
}

std::string forth_copy_mnemonic(uint8_t op) {
    auto nib = [](uint8_t b) {
        int v = b & 0xF;
        return std::to_string(v >= 8 ? v - 16 : v);
    };
    if (op <= 0x0F) return "PUSH " + nib(op);
    if (op <= 0x1F) return "SHIFT " + nib(op);
    switch (op) {
        case 0x20: return "COPY";
        case 0x21: return "INC";
        case 0x22: return "DEC";
        case 0x23: return "JNZ";
        default: return "NOP";
    }
}

std::string bff_mnemonic(uint8_t op) {
    switch (op) {
        case '<': case '>': case '{': case '}':
        case '-': case '+': case '.': case ',':
        case '[': case ']': return std::string(1, static_cast<char>(op));
        case 0: return "0";
        default: return ".";
    }
}

}  // namespace

std::string disassemble(LanguageId lang, std::span<const uint8_t> bytes) {
    if (lang == LanguageId::kSubleq || lang == LanguageId::kRsubleq4)
        return disassemble_subleq(bytes);
    std::string out;
    for (size_t i = 0; i < bytes.size(); ++i) {
        if (i) out += ' ';
        switch (lang) {
            case LanguageId::kForthSoup: out += forth_soup_mnemonic(bytes[i]); break;
            case LanguageId::kForthCopy: out += forth_copy_mnemonic(bytes[i]); break;
            default: out += bff_mnemonic(bytes[i]); break;
        }
    }
    return out;
}

}  // namespace bytesoup
