#include "torslab/phi.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace torslab {

int SimpleSet::count() const { return std::popcount(bits); }

namespace {

void check_universe(const AlgebraPresentation& alg, const SimpleSet& S) {
  if (alg.vertex_count() > 64)
    throw ValidationError("simple-set operations support at most 64 vertices");
  if (S.n != alg.vertex_count())
    throw ValidationError("simple set universe does not match the algebra");
}

std::uint64_t phi_plus_vertex(const AlgebraPresentation& alg, int v) {
  std::uint64_t out = 0;
  for (const Path& p : alg.tail_maximal_paths(v)) out |= (1ull << p.dst);
  return out;
}

std::uint64_t phi_minus_vertex(const AlgebraPresentation& alg, int v) {
  std::uint64_t out = 0;
  for (const Path& p : alg.head_maximal_paths(v)) out |= (1ull << p.src);
  return out;
}

}  // namespace

SimpleSet phi_plus(const AlgebraPresentation& alg, SimpleSet S) {
  check_universe(alg, S);
  SimpleSet out = SimpleSet::empty(S.n);
  for (int v = 0; v < S.n; ++v)
    if (S.contains(v)) out.bits |= phi_plus_vertex(alg, v);
  return out;
}

SimpleSet phi_minus(const AlgebraPresentation& alg, SimpleSet S) {
  check_universe(alg, S);
  SimpleSet out = SimpleSet::empty(S.n);
  for (int v = 0; v < S.n; ++v)
    if (S.contains(v)) out.bits |= phi_minus_vertex(alg, v);
  return out;
}

namespace {

// Least tail-maximal path starting at a complement vertex and ending in S
// (hereditary case); head-maximal and reversed roles for the cohereditary one.
std::optional<Path> failing_witness(const AlgebraPresentation& alg, PairKind kind,
                                    const SimpleSet& S) {
  SimpleSet sc = S.complement();
  for (int j = 0; j < S.n; ++j) {
    if (!sc.contains(j)) continue;
    std::vector<Path> candidates;
    if (kind == PairKind::hereditary) {
      for (const Path& p : alg.tail_maximal_paths(j))
        if (S.contains(p.dst)) candidates.push_back(p);
    } else {
      for (const Path& p : alg.head_maximal_paths(j))
        if (S.contains(p.src)) candidates.push_back(p);
    }
    if (!candidates.empty()) {
      std::sort(candidates.begin(), candidates.end(), path_less);
      return candidates.front();
    }
  }
  return std::nullopt;
}

}  // namespace

HereditaryPairVerdict hereditary_induces_de(const AlgebraPresentation& alg, SimpleSet S) {
  check_universe(alg, S);
  HereditaryPairVerdict v{PairKind::hereditary, S, false, std::nullopt, ""};
  SimpleSet sc = S.complement();
  v.induces_de = phi_plus(alg, sc).subset_of(sc);
  if (v.induces_de) {
    v.certificate = "phi+ of the complement stays inside the complement";
  } else {
    v.witness = failing_witness(alg, PairKind::hereditary, S);
    v.certificate = "tail-maximal path escapes into the set";
  }
  return v;
}

HereditaryPairVerdict cohereditary_induces_de(const AlgebraPresentation& alg, SimpleSet S) {
  check_universe(alg, S);
  HereditaryPairVerdict v{PairKind::cohereditary, S, false, std::nullopt, ""};
  SimpleSet sc = S.complement();
  v.induces_de = phi_minus(alg, sc).subset_of(sc);
  if (v.induces_de) {
    v.certificate = "phi- of the complement stays inside the complement";
  } else {
    v.witness = failing_witness(alg, PairKind::cohereditary, S);
    v.certificate = "head-maximal path escapes into the set";
  }
  return v;
}

CountResult count_de(const AlgebraPresentation& alg, PairKind kind,
                     const CountOptions& opts) {
  int n = alg.vertex_count();
  if (n > 62) throw ValidationError("subset enumeration supports at most 62 vertices");
  if (n > opts.subset_cap)
    throw CapExceeded("subset enumeration over " + std::to_string(n) +
                      " vertices exceeds cap " + std::to_string(opts.subset_cap));

  std::vector<std::uint64_t> img(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    img[static_cast<std::size_t>(v)] =
        kind == PairKind::hereditary ? phi_plus_vertex(alg, v) : phi_minus_vertex(alg, v);

  const std::uint64_t full = SimpleSet::full(n).bits;
  const std::uint64_t total = 1ull << n;
  auto admits = [&](std::uint64_t mask) {
    std::uint64_t sc = full & ~mask;
    std::uint64_t image = 0;
    for (int v = 0; v < n; ++v)
      if ((sc >> v) & 1ull) image |= img[static_cast<std::size_t>(v)];
    return (image & ~sc) == 0;
  };

  int jobs = std::max(1, opts.jobs);
  CountResult result;
  if (jobs == 1 || total < 1024) {
    for (std::uint64_t mask = 0; mask < total; ++mask)
      if (admits(mask)) {
        ++result.count;
        if (opts.list) result.sets.push_back(mask);
      }
    return result;
  }

  std::vector<unsigned long long> counts(static_cast<std::size_t>(jobs), 0);
  std::vector<std::vector<std::uint64_t>> lists(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  for (int j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      std::uint64_t lo = total * static_cast<std::uint64_t>(j) / static_cast<std::uint64_t>(jobs);
      std::uint64_t hi =
          total * static_cast<std::uint64_t>(j + 1) / static_cast<std::uint64_t>(jobs);
      for (std::uint64_t mask = lo; mask < hi; ++mask)
        if (admits(mask)) {
          ++counts[static_cast<std::size_t>(j)];
          if (opts.list) lists[static_cast<std::size_t>(j)].push_back(mask);
        }
    });
  }
  for (auto& w : workers) w.join();
  for (int j = 0; j < jobs; ++j) {
    result.count += counts[static_cast<std::size_t>(j)];
    if (opts.list)
      result.sets.insert(result.sets.end(), lists[static_cast<std::size_t>(j)].begin(),
                         lists[static_cast<std::size_t>(j)].end());
  }
  return result;
}

NakayamaPermutationReport nakayama_permutation(const AlgebraPresentation& alg) {
  NakayamaPermutationReport report;
  int n = alg.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    auto tm = alg.tail_maximal_paths(v);
    if (tm.size() != 1) return report;  // socle not simple
    perm[static_cast<std::size_t>(v)] = tm.front().dst;
  }
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n; ++v) {
    int w = perm[static_cast<std::size_t>(v)];
    if (hit[static_cast<std::size_t>(w)]) return report;  // not a bijection
    hit[static_cast<std::size_t>(w)] = true;
  }
  report.defined = true;
  report.permutation = std::move(perm);
  report.weakly_symmetric = true;
  for (int v = 0; v < n; ++v)
    if (report.permutation[static_cast<std::size_t>(v)] != v) {
      report.weakly_symmetric = false;
      break;
    }
  return report;
}

bool self_injective_closed_under_nu(const AlgebraPresentation& alg, SimpleSet S) {
  check_universe(alg, S);
  auto report = nakayama_permutation(alg);
  if (!report.defined)
    throw PreconditionError("Nakayama permutation is not defined for this algebra");
  SimpleSet image = SimpleSet::empty(S.n);
  for (int v = 0; v < S.n; ++v)
    if (S.contains(v)) image.bits |= (1ull << report.permutation[static_cast<std::size_t>(v)]);
  return image == S;
}

}  // namespace torslab
