#include <set>

#include "doctest.h"
#include "torslab/export.hpp"

using namespace torslab;

namespace {

LatticeReport report_for(const TorsLattice& lat, PartitionModule which) {
  Classifier cls(lat);
  return make_lattice_report(lat, cls, which);
}

}  // namespace

TEST_CASE("json schema and determinism") {
  SerialAlgebra alg(preset("linear_an", std::vector<int>{3}));
  auto lat = TorsLattice::enumerate(alg);
  auto report = report_for(lat, PartitionModule::both);
  auto j1 = lattice_to_json(report);
  auto j2 = lattice_to_json(report_for(lat, PartitionModule::both));
  CHECK(j1.dump() == j2.dump());
  CHECK(j1["schema"] == 1);
  CHECK(j1["summary"]["pairs_total"] == 14);
  CHECK(j1["summary"]["yes"] == 10);
  CHECK(j1["summary"]["no"] == 4);
  CHECK(j1["pairs"].size() == 14);
  CHECK(j1["algebra"]["gldim"] == 1);
  // torsion and free lists are disjoint (some modules may be neither)
  for (const auto& jp : j1["pairs"]) {
    std::set<int> torsion(jp["torsion"].begin(), jp["torsion"].end());
    for (int f : jp["free"]) CHECK_FALSE(torsion.count(f));
  }

  // a lattice enumerated in parallel renders identically
  EnumerateOptions par;
  par.jobs = 4;
  auto lat_par = TorsLattice::enumerate(alg, par);
  CHECK(lattice_to_json(report_for(lat_par, PartitionModule::both)).dump() == j1.dump());
}

TEST_CASE("dot output mirrors the lattice") {
  SerialAlgebra alg(preset("linear_an", std::vector<int>{3}));
  auto lat = TorsLattice::enumerate(alg);
  auto report = report_for(lat, PartitionModule::injnp);
  std::string dot = lattice_to_dot(report);
  CHECK(dot.find("graph tors_lattice {") == 0);
  CHECK(dot.find("style=dashed") != std::string::npos);
  // one node statement per pair, one undirected edge per cover
  std::size_t nodes = 0, pos = 0;
  while ((pos = dot.find("fillcolor=", pos)) != std::string::npos) {
    ++nodes;
    pos += 10;
  }
  CHECK(nodes == 14);
  std::size_t edges = 0;
  pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
    ++edges;
    pos += 4;
  }
  CHECK(edges == lat.covers().size());
  // Fig-style partition: four dashed clusters
  std::size_t clusters = 0;
  pos = 0;
  while ((pos = dot.find("subgraph cluster_", pos)) != std::string::npos) {
    ++clusters;
    pos += 17;
  }
  CHECK(clusters == 4);
  // black fill for yes-nodes, white for no-nodes
  CHECK(dot.find("fillcolor=black") != std::string::npos);
  CHECK(dot.find("fillcolor=white") != std::string::npos);
}

TEST_CASE("text report carries the headline numbers") {
  SerialAlgebra alg(preset("cyclic_radn", std::vector<int>{2, 2}));
  auto lat = TorsLattice::enumerate(alg);
  auto report = report_for(lat, PartitionModule::both);
  std::string text = lattice_to_text(report);
  CHECK(text.find("pairs: 6") != std::string::npos);
  CHECK(text.find("yes=2") != std::string::npos);
  CHECK(text.find("no=4") != std::string::npos);
  CHECK(text.find("gldim: infinite") != std::string::npos);
  CHECK(text.find("tors^d union of maximal chains: no") != std::string::npos);
}
