#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torslab/quiver.hpp"

namespace torslab {

// A uniserial module over a serial algebra, determined up to isomorphism by
// its top vertex and its length. Composition factors read top, step(top), ...
struct IntervalModule {
  int top = -1;
  int len = 0;
  auto operator<=>(const IntervalModule&) const = default;
};

// Finite direct sum, as a multiset of interval modules.
using ModuleSum = std::vector<IntervalModule>;

// Module category of a Nakayama algebra presented by a linear A_n or a single
// oriented cycle with single arrows. Everything is immutable and pure.
class SerialAlgebra {
 public:
  explicit SerialAlgebra(AlgebraPresentation base);

  const AlgebraPresentation& base() const { return base_; }
  int vertex_count() const { return base_.vertex_count(); }
  bool cyclic() const { return cyclic_; }
  int kupisch(int v) const { return kupisch_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& kupisch_series() const { return kupisch_; }
  int next(int v) const { return next_.at(static_cast<std::size_t>(v)); }   // -1 at a chain end
  int prev(int v) const { return prev_.at(static_cast<std::size_t>(v)); }
  int step(int v, int k) const;  // k-fold next; throws if it walks off a chain

  bool valid_module(const IntervalModule& m) const;
  int vertex_at(const IntervalModule& m, int k) const;  // k-th composition factor
  int socle_vertex(const IntervalModule& m) const { return vertex_at(m, m.len - 1); }

  // All (v, len) with 1 <= len <= c_v, ordered by (vertex, length).
  std::vector<IntervalModule> indecomposables() const;
  int indec_index(const IntervalModule& m) const;  // position in that list

  // dim Hom(U, V): diagonal maps through common quotient/submodule intervals.
  int hom_dim(const IntervalModule& u, const IntervalModule& v) const;

  std::optional<IntervalModule> submodule_of_length(const IntervalModule& m, int s) const;
  std::optional<IntervalModule> quotient_of_length(const IntervalModule& m, int s) const;

  bool in_gen(std::span<const IntervalModule> c, const IntervalModule& x) const;
  bool in_cogen(std::span<const IntervalModule> c, const IntervalModule& x) const;

  // Largest submodule of m generated by c; 0 <= result <= m.len.
  int trace_len(std::span<const IntervalModule> c, const IntervalModule& m) const;
  // Smallest submodule of m with quotient cogenerated by c.
  int reject_len(std::span<const IntervalModule> c, const IntervalModule& m) const;

  ModuleSum trace(std::span<const IntervalModule> c, const ModuleSum& m) const;
  ModuleSum reject(std::span<const IntervalModule> c, const ModuleSum& m) const;

  IntervalModule projective_cover(int v) const { return IntervalModule{v, kupisch(v)}; }
  IntervalModule injective_envelope(int v) const;  // E(S_v)

  ModuleSum regular_module() const;         // sum of the P_v
  ModuleSum injective_cogenerator() const;  // sum of the E(S_v)

  std::optional<int> global_dimension() const;  // nullopt when infinite
  bool self_injective() const;

  SerialAlgebra opposite() const { return SerialAlgebra(base_.reversed()); }

  std::string module_name(const IntervalModule& m) const;
  std::string module_sum_name(const ModuleSum& m) const;

 private:
  AlgebraPresentation base_;
  std::vector<int> next_, prev_, kupisch_;
  bool cyclic_ = false;
};

}  // namespace torslab
