#pragma once

#include "pnideal/polynomial.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pnideal {

struct Basis {
  std::vector<Polynomial> polys;
  VarOrder order;
};

struct BuchbergerOptions {
  std::size_t max_iterations = 1'000'000;
};

// same schedule for both: pairs processed in lexicographic order, the
// coprime-LCM guard and the criterion on [i,k],[j,k]
Basis buchberger_standard(std::span<const Polynomial> F, const VarOrder& o,
                          BuchbergerOptions opts = {});
Basis buchberger_es(std::span<const Polynomial> F, const VarOrder& o,
                    BuchbergerOptions opts = {});

bool is_groebner(const Basis& G);
bool reduces_to_zero(const Polynomial& f, const Basis& G);
Basis reduced_basis(const Basis& G);
bool ideal_equal(std::span<const Polynomial> F1, std::span<const Polynomial> F2,
                 const VarOrder& o);
// minimal: no leading monomial divisible by another element's
bool is_minimal(const Basis& G);

// monic under o, sorted by leading monomial (descending), duplicates dropped
std::vector<Polynomial> canonical_set(std::span<const Polynomial> F, const VarOrder& o);

} // namespace pnideal
