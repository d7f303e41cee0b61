#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "torslab/quiver.hpp"

namespace torslab {

// A subset of the simple modules, identified with a subset of the vertices.
struct SimpleSet {
  std::uint64_t bits = 0;
  int n = 0;

  static SimpleSet empty(int n) { return SimpleSet{0, n}; }
  static SimpleSet full(int n) {
    return SimpleSet{n == 64 ? ~0ull : ((1ull << n) - 1), n};
  }
  static SimpleSet of(std::initializer_list<int> vs, int n) {
    SimpleSet s = empty(n);
    for (int v : vs) s.bits |= (1ull << v);
    return s;
  }

  bool contains(int v) const { return (bits >> v) & 1ull; }
  SimpleSet with(int v) const { return SimpleSet{bits | (1ull << v), n}; }
  SimpleSet complement() const { return SimpleSet{full(n).bits & ~bits, n}; }
  SimpleSet united(const SimpleSet& o) const { return SimpleSet{bits | o.bits, n}; }
  bool subset_of(const SimpleSet& o) const { return (bits & ~o.bits) == 0; }
  int count() const;
  bool operator==(const SimpleSet&) const = default;
};

// supp(soc P(S)): endpoints of tail-maximal paths starting in S.
SimpleSet phi_plus(const AlgebraPresentation& alg, SimpleSet S);
// supp(top E(S)): start vertices of head-maximal paths ending in S.
SimpleSet phi_minus(const AlgebraPresentation& alg, SimpleSet S);

enum class PairKind { hereditary, cohereditary };

struct HereditaryPairVerdict {
  PairKind kind;
  SimpleSet set;
  bool induces_de = false;
  // On failure: a tail-maximal (resp. head-maximal) path that starts (resp.
  // ends) outside the set and admits no prolongation escaping it.
  std::optional<Path> witness;
  std::string certificate;
};

// Torsion pair (filt S, S^perp); derived equivalence iff Phi+(S^c) <= S^c.
HereditaryPairVerdict hereditary_induces_de(const AlgebraPresentation& alg, SimpleSet S);
// Torsion pair (perp S, filt S); derived equivalence iff Phi-(S^c) <= S^c.
HereditaryPairVerdict cohereditary_induces_de(const AlgebraPresentation& alg, SimpleSet S);

struct CountOptions {
  int subset_cap = 24;  // refuse to enumerate beyond 2^cap subsets
  int jobs = 1;
  bool list = false;
};

struct CountResult {
  unsigned long long count = 0;
  std::vector<std::uint64_t> sets;  // filled when listing, ascending masks
};

// Exhaustive count of the vertex subsets whose (co)hereditary pair induces
// derived equivalence.
CountResult count_de(const AlgebraPresentation& alg, PairKind kind,
                     const CountOptions& opts = {});

struct NakayamaPermutationReport {
  bool defined = false;
  std::vector<int> permutation;  // vertex -> vertex, when defined
  bool weakly_symmetric = false;
};

// Candidate permutation v -> soc P_v from socle combinatorics; defined when
// every projective has a simple socle and the map is a bijection.
NakayamaPermutationReport nakayama_permutation(const AlgebraPresentation& alg);

// nu(S) == S; requires the permutation to be defined.
bool self_injective_closed_under_nu(const AlgebraPresentation& alg, SimpleSet S);

}  // namespace torslab
