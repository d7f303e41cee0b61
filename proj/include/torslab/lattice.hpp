#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "torslab/serial.hpp"

namespace torslab {

// Bit vectors are indexed by the canonical indecomposable list.
struct TorsionPair {
  std::uint64_t torsion = 0;
  std::uint64_t free = 0;
};

struct EpsilonClass {
  std::vector<int> profile;  // trace length per distinct summand of the module
  std::vector<int> members;  // pair indices, ascending
  int min_pair = -1;         // pair generated by the torsion parts
  int max_pair = -1;         // pair cogenerated by the torsion-free parts
};

struct EnumerateOptions {
  int indec_cap = 22;
  int jobs = 1;
};

// Precomputed per-interval data driving the torsion-class test. Shared with
// the classifier.
struct ModuleTables {
  int m = 0;
  std::vector<IntervalModule> indecs;
  std::vector<int> len;
  std::vector<std::vector<int>> sub_id;   // sub_id[i][s], s = 1..len[i]
  std::vector<std::vector<int>> quot_id;  // quot_id[i][s]
  std::vector<std::uint64_t> sub_mask;    // all submodules of i, incl. i
  std::vector<std::uint64_t> quot_mask;   // all quotients of i, incl. i
  std::vector<std::uint64_t> gen_from;    // gen_from[j]: the U with j a quotient of U
  std::vector<std::uint64_t> cog_into;    // cog_into[j]: the U with j a submodule of U
  std::vector<std::uint64_t> hom_into;    // hom_into[j]: the U with Hom(U, j) != 0
  std::vector<std::uint64_t> hom_from;    // hom_from[j]: the V with Hom(j, V) != 0

  static ModuleTables build(const SerialAlgebra& alg);

  // Largest s with the length-s submodule of i generated by the class c.
  int trace_len(std::uint64_t c, int i) const;
  // Torsion-sequence test: the trace of every indecomposable lies in c and
  // its quotient admits no map from c.
  bool is_torsion_class(std::uint64_t c) const;
  std::uint64_t perp(std::uint64_t c) const;       // { j : Hom(c, j) = 0 }
  std::uint64_t perp_left(std::uint64_t f) const;  // { j : Hom(j, f) = 0 }
};

class TorsLattice {
 public:
  static TorsLattice enumerate(const SerialAlgebra& alg, const EnumerateOptions& opts = {});

  const SerialAlgebra& algebra() const { return alg_; }
  const ModuleTables& tables() const { return tables_; }
  const std::vector<IntervalModule>& indecomposables() const { return tables_.indecs; }

  int size() const { return static_cast<int>(pairs_.size()); }
  const TorsionPair& pair(int i) const { return pairs_.at(static_cast<std::size_t>(i)); }
  const std::vector<TorsionPair>& pairs() const { return pairs_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool leq(int a, int b) const;
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }  // (lower, upper)
  int index_of_torsion(std::uint64_t bits) const;  // -1 when absent
  int index_of_free(std::uint64_t bits) const;

  int meet(int a, int b) const;
  int join(int a, int b) const;

  // (torsion part, torsion-free part) of M, componentwise.
  std::pair<ModuleSum, ModuleSum> torsion_sequence(int pair_idx, const ModuleSum& m) const;
  bool splits(int pair_idx, const ModuleSum& m) const;

  // Group pairs by the torsion-part profile of M and verify each group is the
  // order interval between the generated and cogenerated extremes.
  std::vector<EpsilonClass> partition_by(const ModuleSum& m) const;

  // Every member of the subset lies on a maximal chain contained in it.
  bool is_union_of_maximal_chains(const std::vector<bool>& subset) const;

 private:
  TorsLattice(const SerialAlgebra& alg, ModuleTables tables);

  SerialAlgebra alg_;
  ModuleTables tables_;
  std::vector<TorsionPair> pairs_;  // ascending torsion bits
  std::vector<std::pair<int, int>> covers_;
  int bottom_ = -1;
  int top_ = -1;
};

}  // namespace torslab
