#include "torslab/classify.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace torslab {

const char* to_string(Status s) {
  switch (s) {
    case Status::yes: return "yes";
    case Status::no: return "no";
    case Status::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(Reason r) {
  switch (r) {
    case Reason::split: return "split";
    case Reason::stable: return "stable";
    case Reason::costable: return "co-stable";
    case Reason::ttf_hereditary: return "ttf-hereditary";
    case Reason::ttf_cohereditary: return "ttf-cohereditary";
    case Reason::gldim2: return "gldim2";
    case Reason::necessary_failed: return "necessary-failed";
    case Reason::exhausted: return "exhausted";
  }
  return "?";
}

Classifier::Classifier(const TorsLattice& lat) : lat_(&lat) {
  const SerialAlgebra& alg = lat.algebra();
  for (int v = 0; v < alg.vertex_count(); ++v) {
    proj_ids_.push_back(alg.indec_index(alg.projective_cover(v)));
    inj_ids_.push_back(alg.indec_index(alg.injective_envelope(v)));
  }
  gldim_ = alg.global_dimension();
}

bool Classifier::pair_hereditary(int p) const {
  const ModuleTables& t = lat_->tables();
  std::uint64_t c = lat_->pair(p).torsion;
  for (std::uint64_t rest = c; rest;) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    if (t.sub_mask[static_cast<std::size_t>(i)] & ~c) return false;
  }
  return true;
}

bool Classifier::pair_cohereditary(int p) const {
  const ModuleTables& t = lat_->tables();
  std::uint64_t f = lat_->pair(p).free;
  for (std::uint64_t rest = f; rest;) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    if (t.quot_mask[static_cast<std::size_t>(i)] & ~f) return false;
  }
  return true;
}

namespace {

// Projectives in perp(T) that are missing from F; empty means the inclusion
// perp(T) \cap proj <= F holds.
std::optional<int> projective_obstruction(const ModuleTables& t, const TorsionPair& tp,
                                          const std::vector<int>& proj_ids) {
  for (int v = 0; v < static_cast<int>(proj_ids.size()); ++v) {
    int p = proj_ids[static_cast<std::size_t>(v)];
    bool in_perp_left = (t.hom_from[static_cast<std::size_t>(p)] & tp.torsion) == 0;
    bool in_free = (tp.free >> p) & 1ull;
    if (in_perp_left && !in_free) return p;
  }
  return std::nullopt;
}

// Injectives in F^perp missing from T.
std::optional<int> injective_obstruction(const ModuleTables& t, const TorsionPair& tp,
                                         const std::vector<int>& inj_ids) {
  for (int v = 0; v < static_cast<int>(inj_ids.size()); ++v) {
    int e = inj_ids[static_cast<std::size_t>(v)];
    bool in_perp_right = (t.hom_into[static_cast<std::size_t>(e)] & tp.free) == 0;
    bool in_torsion = (tp.torsion >> e) & 1ull;
    if (in_perp_right && !in_torsion) return e;
  }
  return std::nullopt;
}

bool sequence_splits(const ModuleTables& t, std::uint64_t torsion, int i) {
  int tl = t.trace_len(torsion, i);
  return tl == 0 || tl == t.len[static_cast<std::size_t>(i)];
}

}  // namespace

bool Classifier::necessary_condition(int p, std::string* why) const {
  const ModuleTables& t = lat_->tables();
  const TorsionPair& tp = lat_->pair(p);
  if (auto e = injective_obstruction(t, tp, inj_ids_)) {
    if (why)
      *why = "injective " + lat_->algebra().module_name(t.indecs[static_cast<std::size_t>(*e)]) +
             " lies in perp of F but not in T";
    return false;
  }
  if (auto q = projective_obstruction(t, tp, proj_ids_)) {
    if (why)
      *why = "projective " + lat_->algebra().module_name(t.indecs[static_cast<std::size_t>(*q)]) +
             " lies in perp of T but not in F";
    return false;
  }
  return true;
}

Verdict Classifier::classify(int p) const {
  const ModuleTables& t = lat_->tables();
  const SerialAlgebra& alg = lat_->algebra();
  const TorsionPair& tp = lat_->pair(p);

  // (1) split
  bool split = true;
  for (int i = 0; i < t.m && split; ++i) split = sequence_splits(t, tp.torsion, i);
  if (split) return Verdict{Status::yes, Reason::split, "every torsion sequence splits"};

  // (2) stable: all injectives split
  bool stable = true;
  for (int e : inj_ids_)
    if (!sequence_splits(t, tp.torsion, e)) {
      stable = false;
      break;
    }
  if (stable)
    return Verdict{Status::yes, Reason::stable,
                   "the torsion sequence of every injective splits"};

  // (3) co-stable: all projectives split
  bool costable = true;
  for (int q : proj_ids_)
    if (!sequence_splits(t, tp.torsion, q)) {
      costable = false;
      break;
    }
  if (costable)
    return Verdict{Status::yes, Reason::costable,
                   "the torsion sequence of every projective splits"};

  // (4) hereditary pair: exact via perp(T) \cap proj <= F
  if (pair_hereditary(p)) {
    if (auto q = projective_obstruction(t, tp, proj_ids_))
      return Verdict{Status::no, Reason::ttf_hereditary,
                     "projective " + alg.module_name(t.indecs[static_cast<std::size_t>(*q)]) +
                         " lies in perp of T but not in F"};
    return Verdict{Status::yes, Reason::ttf_hereditary,
                   "perp of T meets the projectives inside F"};
  }

  // (5) cohereditary pair: exact via F^perp \cap inj <= T
  if (pair_cohereditary(p)) {
    if (auto e = injective_obstruction(t, tp, inj_ids_))
      return Verdict{Status::no, Reason::ttf_cohereditary,
                     "injective " + alg.module_name(t.indecs[static_cast<std::size_t>(*e)]) +
                         " lies in perp of F but not in T"};
    return Verdict{Status::yes, Reason::ttf_cohereditary,
                   "perp of F meets the injectives inside T"};
  }

  // (6) gldim <= 2: exact via trace/reject membership, both sides
  if (gldim_ && *gldim_ <= 2) {
    bool gen_ok = true;
    std::ostringstream table;
    for (int v = 0; v < alg.vertex_count() && gen_ok; ++v) {
      int q = proj_ids_[static_cast<std::size_t>(v)];
      int tl = t.trace_len(tp.free, q);
      int rest = t.len[static_cast<std::size_t>(q)] - tl;
      bool ok = rest == 0;
      if (!ok) {
        int f = t.quot_id[static_cast<std::size_t>(q)][static_cast<std::size_t>(rest)];
        ok = (t.cog_into[static_cast<std::size_t>(f)] & tp.torsion) != 0;
      }
      if (v) table << "; ";
      table << alg.module_name(t.indecs[static_cast<std::size_t>(q)]) << "/tr_F in cogen T: "
            << (ok ? "yes" : "no");
      gen_ok = ok;
    }
    bool cog_ok = true;
    for (int v = 0; v < alg.vertex_count() && cog_ok; ++v) {
      int e = inj_ids_[static_cast<std::size_t>(v)];
      int len = t.len[static_cast<std::size_t>(e)];
      int rl = len;
      for (int s = 0; s <= len; ++s) {
        int rest = len - s;
        bool quotient_ok = rest == 0;
        if (!quotient_ok) {
          int f = t.quot_id[static_cast<std::size_t>(e)][static_cast<std::size_t>(rest)];
          quotient_ok = (t.cog_into[static_cast<std::size_t>(f)] & tp.torsion) != 0;
        }
        if (quotient_ok) {
          rl = s;
          break;
        }
      }
      bool ok = rl == 0;
      if (!ok) {
        int r = t.sub_id[static_cast<std::size_t>(e)][static_cast<std::size_t>(rl)];
        ok = (t.gen_from[static_cast<std::size_t>(r)] & tp.free) != 0;
      }
      cog_ok = ok;
    }
    if (gen_ok != cog_ok)
      throw std::logic_error("generator and cogenerator gldim2 criteria disagree");
    return Verdict{gen_ok ? Status::yes : Status::no, Reason::gldim2, table.str()};
  }

  // (7) necessary condition
  std::string why;
  if (!necessary_condition(p, &why)) return Verdict{Status::no, Reason::necessary_failed, why};
  return Verdict{Status::unknown, Reason::exhausted,
                 "necessary condition holds; no exact criterion applies"};
}

ClassifyAllReport Classifier::classify_all() const {
  ClassifyAllReport report;
  report.verdicts.reserve(static_cast<std::size_t>(lat_->size()));
  report.tors_d.resize(static_cast<std::size_t>(lat_->size()), false);
  for (int p = 0; p < lat_->size(); ++p) {
    Verdict v = classify(p);
    report.counts[{v.status, v.reason}]++;
    switch (v.status) {
      case Status::yes:
        ++report.yes_count;
        report.tors_d[static_cast<std::size_t>(p)] = true;
        break;
      case Status::no: ++report.no_count; break;
      case Status::unknown: ++report.unknown_count; break;
    }
    report.verdicts.push_back(std::move(v));
  }
  report.torsd_union_of_maximal_chains = lat_->is_union_of_maximal_chains(report.tors_d);

  if (gldim_ && *gldim_ <= 2) {
    const SerialAlgebra& alg = lat_->algebra();
    ModuleSum both = alg.regular_module();
    ModuleSum dual = alg.injective_cogenerator();
    both.insert(both.end(), dual.begin(), dual.end());
    bool homogeneous = true;
    for (const EpsilonClass& cls : lat_->partition_by(both)) {
      Status first = report.verdicts[static_cast<std::size_t>(cls.members.front())].status;
      for (int m : cls.members)
        if (report.verdicts[static_cast<std::size_t>(m)].status != first) homogeneous = false;
    }
    report.partition_homogeneous = homogeneous;
    report.upper_set_ok = upper_set_check(report.verdicts);
    report.lower_set_ok = lower_set_check(report.verdicts);
  }
  return report;
}

bool Classifier::upper_set_check(const std::vector<Verdict>& verdicts) const {
  if (!gldim_ || *gldim_ > 2)
    throw PreconditionError("upper-set check requires global dimension <= 2");
  for (const EpsilonClass& cls : lat_->partition_by(lat_->algebra().regular_module()))
    for (int a : cls.members)
      for (int b : cls.members)
        if (lat_->leq(a, b) && verdicts[static_cast<std::size_t>(a)].status == Status::yes &&
            verdicts[static_cast<std::size_t>(b)].status != Status::yes)
          return false;
  return true;
}

bool Classifier::lower_set_check(const std::vector<Verdict>& verdicts) const {
  if (!gldim_ || *gldim_ > 2)
    throw PreconditionError("lower-set check requires global dimension <= 2");
  for (const EpsilonClass& cls : lat_->partition_by(lat_->algebra().injective_cogenerator()))
    for (int a : cls.members)
      for (int b : cls.members)
        if (lat_->leq(a, b) && verdicts[static_cast<std::size_t>(b)].status == Status::yes &&
            verdicts[static_cast<std::size_t>(a)].status != Status::yes)
          return false;
  return true;
}

ChainExtensionReport Classifier::chain_extension_check() const {
  ChainExtensionReport report;
  const SerialAlgebra& alg = lat_->algebra();
  const ModuleTables& t = lat_->tables();
  report.acyclic = alg.base().is_acyclic_algebra();

  ClassifyAllReport all = classify_all();
  report.all_decided = all.unknown_count == 0;
  report.chains_ok = all.torsd_union_of_maximal_chains;
  if (!report.precondition_ok()) {
    report.note = !report.acyclic
                      ? (std::string("algebra is not acyclic; tors^d is ") +
                         (report.chains_ok ? "" : "not ") + "a union of maximal chains")
                      : "some pairs are undecided";
    return report;
  }

  // filt{S_v}: intervals all of whose composition factors equal v
  std::vector<std::uint64_t> filt_single(static_cast<std::size_t>(alg.vertex_count()), 0);
  for (int i = 0; i < t.m; ++i) {
    const IntervalModule& x = t.indecs[static_cast<std::size_t>(i)];
    bool uniform = true;
    for (int k = 0; k < x.len && uniform; ++k) uniform = alg.vertex_at(x, k) == x.top;
    if (uniform) filt_single[static_cast<std::size_t>(x.top)] |= 1ull << i;
  }

  report.atoms_ok = true;
  report.coatoms_ok = true;
  for (int p = 0; p < lat_->size(); ++p) {
    if (!all.tors_d[static_cast<std::size_t>(p)]) continue;
    if (p != lat_->bottom()) {
      bool found = false;
      for (int v = 0; v < alg.vertex_count() && !found; ++v) {
        int simple_id = alg.indec_index(IntervalModule{v, 1});
        if (!(lat_->pair(p).torsion >> simple_id & 1ull)) continue;
        int atom = lat_->index_of_torsion(filt_single[static_cast<std::size_t>(v)]);
        if (atom < 0) throw std::logic_error("filt of a simple is missing from the lattice");
        if (!lat_->leq(atom, p)) throw std::logic_error("filt of a torsion simple not below");
        if (all.tors_d[static_cast<std::size_t>(atom)]) found = true;
      }
      if (!found) report.atoms_ok = false;
    }
    if (p != lat_->top()) {
      bool found = false;
      for (int v = 0; v < alg.vertex_count() && !found; ++v) {
        int simple_id = alg.indec_index(IntervalModule{v, 1});
        if (!(lat_->pair(p).free >> simple_id & 1ull)) continue;
        int coatom = lat_->index_of_free(filt_single[static_cast<std::size_t>(v)]);
        if (coatom < 0) throw std::logic_error("cofilt of a simple is missing from the lattice");
        if (!lat_->leq(p, coatom)) throw std::logic_error("cofilt of a free simple not above");
        if (all.tors_d[static_cast<std::size_t>(coatom)]) found = true;
      }
      if (!found) report.coatoms_ok = false;
    }
  }
  return report;
}

}  // namespace torslab
