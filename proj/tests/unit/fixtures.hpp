#pragma once

#include "pnideal/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace fx {

using namespace pnideal;

// X[1..12] of the canonical detour, numbered along the persistent path
inline std::vector<AtomVar> detour_x() {
  auto paths = persistent_paths(detour_net());
  std::vector<AtomVar> x{AtomVar{-1, 0}};
  x.insert(x.end(), paths.at(0).begin(), paths.at(0).end());
  return x;
}

inline Polynomial diff(AtomVar hi, AtomVar lo) { return Polynomial::difference(hi, lo); }

inline AtomVar v(int e, std::uint32_t i = 0) { return AtomVar{e, i}; }

inline Polynomial P(const char* s) { return parse_polynomial(s); }

inline std::vector<std::string> strs(const std::vector<Polynomial>& ps, const VarOrder& o) {
  std::vector<std::string> out;
  for (auto& p : ps)
    out.push_back(p.to_string(o));
  return out;
}

inline std::vector<std::string> strs(const std::vector<AtomVar>& vs) {
  std::vector<std::string> out;
  for (auto a : vs)
    out.push_back(to_string(a));
  return out;
}

} // namespace fx
