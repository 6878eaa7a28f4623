#pragma once

#include "pnideal/io.hpp"
#include "pnideal/netideal.hpp"
#include "pnideal/reduction.hpp"
#include "pnideal/sequent.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pnideal {

struct TheoremReport {
  std::string theorem;
  std::string net;
  bool pass = false;
  bool vacuous = false;
  std::optional<std::string> witness;
};

json to_json(const TheoremReport& r);
std::string to_line(const TheoremReport& r);

struct CheckOptions {
  IdealOptions ideal;
};

// I_pi' = I_pi meet P_pi'
TheoremReport check_ideal_intersection(const ProofStructure& g, const Redex& r,
                                       const CheckOptions& opts = {});
// G0(pi') = Bes(G^Gamma(pi), <Gamma) meet P_pi'
TheoremReport check_elimination_theorem(const ProofStructure& g,
                                        const std::vector<std::size_t>& steps,
                                        const CheckOptions& opts = {});
TheoremReport check_elimination_theorem(const ProofStructure& g, const NormalizationResult& seq,
                                        const CheckOptions& opts = {});
// Gn(normal form) = B(Gn(pi), <n) meet P_normal
TheoremReport check_execution_theorem(const ProofStructure& g, const CheckOptions& opts = {});
TheoremReport check_goi(const ProofStructure& g, const CheckOptions& opts = {});
TheoremReport check_ts_identities(const ProofStructure& g, const Redex& r,
                                  const CheckOptions& opts = {});

// the permutation read off chains, on positions of the conclusion's atoms
std::vector<std::size_t> goi_permutation(const ProofStructure& g);
// the involution U_i <-> V_sigma(i) on the same positions
std::vector<std::size_t> boundary_involution(const ProofStructure& g,
                                             const IdealOptions& opts = {});

SequentProof random_net(std::uint64_t seed, std::size_t max_rules, bool atomic_axioms = true);
// ~A and A (in either order), from atomic axioms, tensor and par
SequentProof identity_proof(const Formula& a);

struct NamedNet {
  std::string name;
  ProofStructure net;
};

SequentProof smallest_proof();
SequentProof lambda_proof();      // (\x.x)x, |- ~U, U
SequentProof detour_body_proof(); // canonical detour without the final par
SequentProof detour_proof();
ProofStructure smallest_net();
ProofStructure lambda_net();
ProofStructure detour_net();

struct CorpusLimits {
  std::size_t max_cuts = 8;
  std::size_t max_vars = 40;
  std::size_t max_rules = 16;
  std::size_t min_cuts = 1;
  bool atomic_axioms = true;
};

// single-conclusion nets translated from random proofs, conclusions
// combined with par; deterministic in (seed, count, limits)
std::vector<NamedNet> random_corpus(std::uint64_t seed, std::size_t count,
                                    const CorpusLimits& limits = {});
std::vector<NamedNet> named_nets();

enum class Suite { Intersection, Elimination, Execution, Goi, Ts };
std::string to_string(Suite s);
std::optional<Suite> parse_suite(const std::string& s);
std::vector<Suite> all_suites();

// runs one suite on one net; random choices seeded by `seed`
std::vector<TheoremReport> run_suite(Suite s, const NamedNet& n, std::uint64_t seed,
                                     const CheckOptions& opts = {});

} // namespace pnideal
