#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torslab/errors.hpp"

namespace torslab {

struct Arrow {
  std::string name;
  int src = -1;
  int dst = -1;
};

// Vertices carry dense internal ids 0..n-1; `labels` keeps the external
// integer names used by input files and reports.
class Quiver {
 public:
  int add_vertex(int label);
  int add_arrow(std::string name, int src, int dst);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  int label_of(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::optional<int> vertex_of_label(int label) const;
  const Arrow& arrow(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<int>& out_arrows(int v) const { return out_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& in_arrows(int v) const { return in_.at(static_cast<std::size_t>(v)); }

 private:
  std::vector<int> labels_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// A path is a composable arrow sequence; composition reads left to right, so
// extending a path appends at the tail. Trivial paths have an empty sequence.
struct Path {
  int src = -1;
  int dst = -1;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }
  static Path trivial_at(int v) { return Path{v, v, {}}; }
};

bool operator==(const Path& a, const Path& b);

// Canonical order: (length, arrow ids lexicographically, source).
bool path_less(const Path& a, const Path& b);

struct MonomialIdeal {
  std::vector<std::vector<int>> generators;  // arrow-id sequences, length >= 2
  std::optional<int> radical_power;          // all paths of this length vanish
};

inline constexpr std::size_t kDefaultPathCap = 100000;

// A bound quiver algebra kQ/I for a monomial ideal I, with the finite set of
// nonzero paths enumerated up front. Immutable after construction.
class AlgebraPresentation {
 public:
  static AlgebraPresentation build(Quiver quiver, MonomialIdeal ideal,
                                   std::size_t path_cap = kDefaultPathCap);

  const Quiver& quiver() const { return quiver_; }
  const MonomialIdeal& ideal() const { return ideal_; }
  int vertex_count() const { return quiver_.vertex_count(); }

  bool is_nonzero(const Path& p) const;
  const std::vector<Path>& nonzero_paths() const { return nonzero_paths_; }
  const std::vector<Path>& nonzero_paths_from(int v) const;

  std::vector<Path> tail_maximal_paths(int v) const;
  std::vector<Path> head_maximal_paths(int v) const;

  // No cycle through the digraph whose edges record the existence of a
  // nontrivial nonzero path between two vertices (equivalently, no cyclic
  // chain of nonzero noninvertible maps between indecomposable projectives).
  bool is_acyclic_algebra() const;

  // Same labels, all arrows and relation words reversed.
  AlgebraPresentation reversed() const;

  std::string path_to_string(const Path& p) const;
  std::string summary() const;

 private:
  AlgebraPresentation() = default;

  Quiver quiver_;
  MonomialIdeal ideal_;
  std::vector<Path> nonzero_paths_;
  std::vector<std::vector<Path>> from_vertex_;
};

AlgebraPresentation parse_quiver_spec(std::string_view text,
                                      std::size_t path_cap = kDefaultPathCap);

// Built-in families: linear_an(n[,rad]), cyclic_radn(m,rad), star(n,sinks),
// kronecker(arrows). Vertices are labelled 1..n.
AlgebraPresentation preset(const std::string& name, std::span<const int> params,
                           std::size_t path_cap = kDefaultPathCap);

// (name, usage, description) rows for the CLI.
std::vector<std::array<std::string, 3>> preset_catalog();

}  // namespace torslab
