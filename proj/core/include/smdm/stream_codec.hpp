#pragma once

#include <istream>
#include <ostream>

#include "smdm/shell_mapper.hpp"

namespace smdm {

/// On-disk symbol representation: one byte per symbol carrying the 0-based
/// alphabet position, or decimal text with one sequence per line.
enum class SymbolFormat { bytes, text };

/// Splits the input bit stream into m-bit blocks (most significant bit first
/// within each block) and maps each block to one n-symbol sequence. The bit
/// count must be a multiple of m; a trailing partial block is an error.
void encode_stream(const ShellMapper& mapper, unsigned input_bits, std::istream& in,
                   std::ostream& out, SymbolFormat format = SymbolFormat::bytes);

/// Exact inverse of encode_stream. The symbol count must be a multiple of n.
/// When the recovered bit count is not a whole number of bytes the final
/// byte is zero-padded at the least significant end.
void decode_stream(const ShellMapper& mapper, unsigned input_bits, std::istream& in,
                   std::ostream& out, SymbolFormat format = SymbolFormat::bytes);

}  // namespace smdm
