#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torslab/lattice.hpp"

namespace torslab {

enum class Status { yes, no, unknown };

enum class Reason {
  split,
  stable,
  costable,
  ttf_hereditary,
  ttf_cohereditary,
  gldim2,
  necessary_failed,
  exhausted,
};

const char* to_string(Status s);
const char* to_string(Reason r);

struct Verdict {
  Status status = Status::unknown;
  Reason reason = Reason::exhausted;
  std::string detail;
};

struct ChainExtensionReport {
  bool acyclic = false;
  bool all_decided = false;
  bool atoms_ok = false;
  bool coatoms_ok = false;
  bool chains_ok = false;
  std::string note;

  bool precondition_ok() const { return acyclic && all_decided; }
  bool holds() const { return precondition_ok() && atoms_ok && coatoms_ok && chains_ok; }
};

struct ClassifyAllReport {
  std::vector<Verdict> verdicts;
  std::map<std::pair<Status, Reason>, int> counts;
  int yes_count = 0;
  int no_count = 0;
  int unknown_count = 0;
  std::vector<bool> tors_d;  // status == yes, per pair
  bool torsd_union_of_maximal_chains = false;
  // Set when gldim <= 2: every tors(M/eps) class for M = Lambda + DLambda has
  // one verdict, and yes-verdicts are an upper set (lower set) per class for
  // the generator (cogenerator) module.
  std::optional<bool> partition_homogeneous;
  std::optional<bool> upper_set_ok;
  std::optional<bool> lower_set_ok;
};

// Decides derived equivalence of the HRS-tilt at each enumerated torsion
// pair, by the cheapest applicable criterion; Unknown is reserved for
// gldim >= 3 pairs that are neither hereditary nor cohereditary and pass the
// necessary condition.
class Classifier {
 public:
  explicit Classifier(const TorsLattice& lat);
  explicit Classifier(TorsLattice&&) = delete;  // keep the lattice alive

  const TorsLattice& lattice() const { return *lat_; }
  std::optional<int> gldim() const { return gldim_; }

  bool pair_hereditary(int p) const;    // torsion class closed under submodules
  bool pair_cohereditary(int p) const;  // free class closed under quotients
  bool necessary_condition(int p, std::string* why = nullptr) const;

  Verdict classify(int p) const;
  ClassifyAllReport classify_all() const;

  // Within each tors(M/eps) class, yes-verdicts form an upper set for
  // M = Lambda and a lower set for M = DLambda. Requires gldim <= 2.
  bool upper_set_check(const std::vector<Verdict>& verdicts) const;
  bool lower_set_check(const std::vector<Verdict>& verdicts) const;

  // Acyclic algebras: below every derived-equivalence pair sits a hereditary
  // single-simple pair with the same property, dually above it, and tors^d is
  // a union of maximal chains.
  ChainExtensionReport chain_extension_check() const;

 private:
  const TorsLattice* lat_;
  std::vector<int> proj_ids_;  // P_v per vertex
  std::vector<int> inj_ids_;   // E(S_v) per vertex
  std::optional<int> gldim_;
};

}  // namespace torslab
