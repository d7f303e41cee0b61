#include "torslab/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

namespace torslab {

ModuleTables ModuleTables::build(const SerialAlgebra& alg) {
  ModuleTables t;
  t.indecs = alg.indecomposables();
  t.m = static_cast<int>(t.indecs.size());
  auto id_of = [&](const IntervalModule& x) { return alg.indec_index(x); };

  t.len.resize(static_cast<std::size_t>(t.m));
  t.sub_id.resize(static_cast<std::size_t>(t.m));
  t.quot_id.resize(static_cast<std::size_t>(t.m));
  t.sub_mask.assign(static_cast<std::size_t>(t.m), 0);
  t.quot_mask.assign(static_cast<std::size_t>(t.m), 0);
  for (int i = 0; i < t.m; ++i) {
    const IntervalModule& x = t.indecs[static_cast<std::size_t>(i)];
    t.len[static_cast<std::size_t>(i)] = x.len;
    auto& subs = t.sub_id[static_cast<std::size_t>(i)];
    auto& quots = t.quot_id[static_cast<std::size_t>(i)];
    subs.assign(static_cast<std::size_t>(x.len) + 1, -1);
    quots.assign(static_cast<std::size_t>(x.len) + 1, -1);
    for (int s = 1; s <= x.len; ++s) {
      subs[static_cast<std::size_t>(s)] = id_of(*alg.submodule_of_length(x, s));
      quots[static_cast<std::size_t>(s)] = id_of(*alg.quotient_of_length(x, s));
      t.sub_mask[static_cast<std::size_t>(i)] |= 1ull << subs[static_cast<std::size_t>(s)];
      t.quot_mask[static_cast<std::size_t>(i)] |= 1ull << quots[static_cast<std::size_t>(s)];
    }
  }
  t.gen_from.assign(static_cast<std::size_t>(t.m), 0);
  t.cog_into.assign(static_cast<std::size_t>(t.m), 0);
  t.hom_into.assign(static_cast<std::size_t>(t.m), 0);
  t.hom_from.assign(static_cast<std::size_t>(t.m), 0);
  for (int u = 0; u < t.m; ++u) {
    for (int j = 0; j < t.m; ++j) {
      if (t.quot_mask[static_cast<std::size_t>(u)] >> j & 1ull)
        t.gen_from[static_cast<std::size_t>(j)] |= 1ull << u;
      if (t.sub_mask[static_cast<std::size_t>(u)] >> j & 1ull)
        t.cog_into[static_cast<std::size_t>(j)] |= 1ull << u;
      int h = alg.hom_dim(t.indecs[static_cast<std::size_t>(u)],
                          t.indecs[static_cast<std::size_t>(j)]);
      if (h > 0) {
        t.hom_into[static_cast<std::size_t>(j)] |= 1ull << u;
        t.hom_from[static_cast<std::size_t>(u)] |= 1ull << j;
      }
    }
  }
  return t;
}

int ModuleTables::trace_len(std::uint64_t c, int i) const {
  const auto& subs = sub_id[static_cast<std::size_t>(i)];
  for (int s = len[static_cast<std::size_t>(i)]; s >= 1; --s)
    if (gen_from[static_cast<std::size_t>(subs[static_cast<std::size_t>(s)])] & c) return s;
  return 0;
}

bool ModuleTables::is_torsion_class(std::uint64_t c) const {
  for (int i = 0; i < m; ++i) {
    int tl = trace_len(c, i);
    if (tl > 0 &&
        !(c >> sub_id[static_cast<std::size_t>(i)][static_cast<std::size_t>(tl)] & 1ull))
      return false;
    if (tl < len[static_cast<std::size_t>(i)]) {
      int f = quot_id[static_cast<std::size_t>(i)]
                     [static_cast<std::size_t>(len[static_cast<std::size_t>(i)] - tl)];
      if (hom_into[static_cast<std::size_t>(f)] & c) return false;
    }
  }
  return true;
}

std::uint64_t ModuleTables::perp(std::uint64_t c) const {
  std::uint64_t out = 0;
  for (int j = 0; j < m; ++j)
    if (!(hom_into[static_cast<std::size_t>(j)] & c)) out |= 1ull << j;
  return out;
}

std::uint64_t ModuleTables::perp_left(std::uint64_t f) const {
  std::uint64_t out = 0;
  for (int j = 0; j < m; ++j)
    if (!(hom_from[static_cast<std::size_t>(j)] & f)) out |= 1ull << j;
  return out;
}

TorsLattice::TorsLattice(const SerialAlgebra& alg, ModuleTables tables)
    : alg_(alg), tables_(std::move(tables)) {}

TorsLattice TorsLattice::enumerate(const SerialAlgebra& alg, const EnumerateOptions& opts) {
  ModuleTables tables = ModuleTables::build(alg);
  int m = tables.m;
  if (m > 62) throw ValidationError("lattice enumeration supports at most 62 indecomposables");
  if (m > opts.indec_cap)
    throw CapExceeded("lattice enumeration over " + std::to_string(m) +
                      " indecomposables exceeds cap " + std::to_string(opts.indec_cap));

  auto passes = [&](std::uint64_t c) {
    // quotient-closure precheck, then the full torsion-sequence test
    for (std::uint64_t rest = c; rest;) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      if (tables.quot_mask[static_cast<std::size_t>(i)] & ~c) return false;
    }
    return tables.is_torsion_class(c);
  };

  const std::uint64_t total = 1ull << m;
  std::vector<std::uint64_t> hits;
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || total < 4096) {
    for (std::uint64_t c = 0; c < total; ++c)
      if (passes(c)) hits.push_back(c);
  } else {
    std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        std::uint64_t lo = total * static_cast<std::uint64_t>(j) / static_cast<std::uint64_t>(jobs);
        std::uint64_t hi =
            total * static_cast<std::uint64_t>(j + 1) / static_cast<std::uint64_t>(jobs);
        for (std::uint64_t c = lo; c < hi; ++c)
          if (passes(c)) parts[static_cast<std::size_t>(j)].push_back(c);
      });
    }
    for (auto& w : workers) w.join();
    for (auto& part : parts) hits.insert(hits.end(), part.begin(), part.end());
  }

  TorsLattice lat(alg, std::move(tables));
  lat.pairs_.reserve(hits.size());
  for (std::uint64_t c : hits) lat.pairs_.push_back(TorsionPair{c, lat.tables_.perp(c)});
  lat.bottom_ = lat.index_of_torsion(0);
  lat.top_ = lat.index_of_torsion(total - 1);
  if (lat.bottom_ < 0 || lat.top_ < 0)
    throw std::logic_error("torsion lattice is missing an extreme element");

  // Hasse edges by transitive reduction; pair order is a linear extension
  // because strict inclusion of bit masks implies a smaller value.
  int p = lat.size();
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      if (a == b || !lat.leq(a, b)) continue;
      bool cover = true;
      for (int k = 0; k < p && cover; ++k)
        if (k != a && k != b && lat.leq(a, k) && lat.leq(k, b)) cover = false;
      if (cover) lat.covers_.emplace_back(a, b);
    }
  }
  return lat;
}

bool TorsLattice::leq(int a, int b) const {
  return (pair(a).torsion & ~pair(b).torsion) == 0;
}

int TorsLattice::index_of_torsion(std::uint64_t bits) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), bits,
                             [](const TorsionPair& p, std::uint64_t v) { return p.torsion < v; });
  if (it == pairs_.end() || it->torsion != bits) return -1;
  return static_cast<int>(it - pairs_.begin());
}

int TorsLattice::index_of_free(std::uint64_t bits) const {
  for (int i = 0; i < size(); ++i)
    if (pairs_[static_cast<std::size_t>(i)].free == bits) return i;
  return -1;
}

int TorsLattice::meet(int a, int b) const {
  int idx = index_of_torsion(pair(a).torsion & pair(b).torsion);
  if (idx < 0) throw std::logic_error("meet left the lattice");
  return idx;
}

int TorsLattice::join(int a, int b) const {
  std::uint64_t f = pair(a).free & pair(b).free;
  int idx = index_of_torsion(tables_.perp_left(f));
  if (idx < 0) throw std::logic_error("join left the lattice");
  return idx;
}

std::pair<ModuleSum, ModuleSum> TorsLattice::torsion_sequence(int pair_idx,
                                                              const ModuleSum& m) const {
  const TorsionPair& tp = pair(pair_idx);
  ModuleSum t, f;
  for (const IntervalModule& x : m) {
    int i = alg_.indec_index(x);
    int tl = tables_.trace_len(tp.torsion, i);
    if (tl > 0) t.push_back(*alg_.submodule_of_length(x, tl));
    if (tl < x.len) {
      IntervalModule q = *alg_.quotient_of_length(x, x.len - tl);
      if (!(tp.free >> alg_.indec_index(q) & 1ull))
        throw std::logic_error("torsion-free part escaped the perp class");
      f.push_back(q);
    }
  }
  std::sort(t.begin(), t.end());
  std::sort(f.begin(), f.end());
  return {std::move(t), std::move(f)};
}

bool TorsLattice::splits(int pair_idx, const ModuleSum& m) const {
  const TorsionPair& tp = pair(pair_idx);
  for (const IntervalModule& x : m) {
    int tl = tables_.trace_len(tp.torsion, alg_.indec_index(x));
    if (tl != 0 && tl != x.len) return false;
  }
  return true;
}

std::vector<EpsilonClass> TorsLattice::partition_by(const ModuleSum& m) const {
  ModuleSum summands = m;
  std::sort(summands.begin(), summands.end());
  summands.erase(std::unique(summands.begin(), summands.end()), summands.end());

  std::map<std::vector<int>, std::vector<int>> groups;
  for (int p = 0; p < size(); ++p) {
    std::vector<int> profile;
    profile.reserve(summands.size());
    for (const IntervalModule& x : summands)
      profile.push_back(tables_.trace_len(pair(p).torsion, alg_.indec_index(x)));
    groups[profile].push_back(p);
  }

  std::vector<EpsilonClass> classes;
  for (auto& [profile, members] : groups) {
    EpsilonClass cls;
    cls.profile = profile;
    cls.members = members;

    std::uint64_t tset = 0, fset = 0;
    for (std::size_t i = 0; i < summands.size(); ++i) {
      const IntervalModule& x = summands[i];
      int tl = profile[i];
      if (tl > 0) tset |= 1ull << alg_.indec_index(*alg_.submodule_of_length(x, tl));
      if (tl < x.len) fset |= 1ull << alg_.indec_index(*alg_.quotient_of_length(x, x.len - tl));
    }

    // smallest torsion class containing the torsion parts
    std::uint64_t meet_bits = pair(top()).torsion;
    for (int p = 0; p < size(); ++p)
      if ((tset & ~pair(p).torsion) == 0) meet_bits &= pair(p).torsion;
    cls.min_pair = index_of_torsion(meet_bits);
    if (cls.min_pair < 0) throw std::logic_error("generated extreme left the lattice");

    // largest pair whose torsion-free class contains the torsion-free parts
    int best = -1;
    for (int p = 0; p < size(); ++p) {
      if ((fset & ~pair(p).free) != 0) continue;
      if (best < 0 || std::popcount(pair(p).torsion) > std::popcount(pair(best).torsion))
        best = p;
    }
    if (best < 0) throw std::logic_error("cogenerated extreme left the lattice");
    for (int p = 0; p < size(); ++p)
      if ((fset & ~pair(p).free) == 0 && (pair(p).torsion & ~pair(best).torsion) != 0)
        throw std::logic_error("cogenerated candidates have no maximum");
    cls.max_pair = best;

    std::vector<int> interval;
    for (int p = 0; p < size(); ++p)
      if (leq(cls.min_pair, p) && leq(p, cls.max_pair)) interval.push_back(p);
    if (interval != cls.members)
      throw std::logic_error("epsilon class is not the order interval of its extremes");

    classes.push_back(std::move(cls));
  }
  return classes;
}

bool TorsLattice::is_union_of_maximal_chains(const std::vector<bool>& subset) const {
  if (static_cast<int>(subset.size()) != size())
    throw ValidationError("subset size does not match the lattice");
  std::vector<bool> up(subset.size(), false), down(subset.size(), false);
  up[static_cast<std::size_t>(bottom())] = subset[static_cast<std::size_t>(bottom())];
  down[static_cast<std::size_t>(top())] = subset[static_cast<std::size_t>(top())];
  // pair order is a linear extension, so one sweep per direction suffices
  for (int p = 0; p < size(); ++p) {
    if (!subset[static_cast<std::size_t>(p)] || up[static_cast<std::size_t>(p)]) continue;
    for (const auto& [lo, hi] : covers_)
      if (hi == p && up[static_cast<std::size_t>(lo)]) {
        up[static_cast<std::size_t>(p)] = true;
        break;
      }
  }
  for (int p = size() - 1; p >= 0; --p) {
    if (!subset[static_cast<std::size_t>(p)] || down[static_cast<std::size_t>(p)]) continue;
    for (const auto& [lo, hi] : covers_)
      if (lo == p && down[static_cast<std::size_t>(hi)]) {
        down[static_cast<std::size_t>(p)] = true;
        break;
      }
  }
  for (int p = 0; p < size(); ++p)
    if (subset[static_cast<std::size_t>(p)] &&
        !(up[static_cast<std::size_t>(p)] && down[static_cast<std::size_t>(p)]))
      return false;
  return true;
}

}  // namespace torslab
