#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pnideal {

using NodeId = int;
using EdgeId = int;

// one unoriented atom occurrence: position `index` in the atom sequence of
// the formula carried by `edge`
struct AtomVar {
  EdgeId edge = 0;
  std::uint32_t index = 0;

  friend bool operator==(const AtomVar&, const AtomVar&) = default;
  friend auto operator<=>(const AtomVar&, const AtomVar&) = default;
};

// x<edge>_<index>
std::string to_string(AtomVar v);
AtomVar parse_atom_var(std::string_view s);

} // namespace pnideal
