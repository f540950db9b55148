#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "dcas/characteristic.hpp"

namespace dcas {

// State-file layout, bit-exact:
//   magic "DCAS1" (5 bytes)
//   n, m as unsigned 32-bit little-endian
//   n object names, then m element names (u32 length + UTF-8 bytes each)
//   M (n rows), gamma (n rows), pi (n rows), each row packed into
//   little-endian 64-bit words
// Element member sets are the columns of M; nothing else is stored.

/// Returns the number of bytes written.
std::size_t save_state(const CharState& state, std::ostream& out);

/// Reloads a state. Unless trust is set, recomputes gamma and pi from M
/// and rejects the file on any mismatch.
CharState load_state(std::istream& in, bool trust = false);

/// Atomic write: temp file in the same directory, then rename.
void save_state_file(const CharState& state, const std::string& path);
CharState load_state_file(const std::string& path, bool trust = false);

} // namespace dcas
