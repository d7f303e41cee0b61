#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "torslab/classify.hpp"

namespace torslab {

// Choice of the module whose torsion sequences drive the epsilon partition.
enum class PartitionModule {
  both,     // Lambda + DLambda
  lambda,   // sum of the indecomposable projectives
  dlambda,  // sum of the indecomposable injectives
  injnp,    // indecomposable injectives that are not projective
};

ModuleSum partition_module(const SerialAlgebra& alg, PartitionModule which);
const char* to_string(PartitionModule which);

struct LatticeReport {
  const TorsLattice* lattice = nullptr;
  ClassifyAllReport classification;
  PartitionModule module_choice = PartitionModule::both;
  ModuleSum module_summands;  // deduplicated
  std::vector<EpsilonClass> partition;
};

LatticeReport make_lattice_report(const TorsLattice& lat, const Classifier& cls,
                                  PartitionModule which = PartitionModule::both);

nlohmann::ordered_json lattice_to_json(const LatticeReport& report);

// Undirected Hasse edges, nodes filled black/white/gray by verdict, dashed
// cluster boxes per epsilon class.
std::string lattice_to_dot(const LatticeReport& report);

std::string lattice_to_text(const LatticeReport& report);

}  // namespace torslab
