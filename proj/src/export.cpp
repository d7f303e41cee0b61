#include "torslab/export.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace torslab {

ModuleSum partition_module(const SerialAlgebra& alg, PartitionModule which) {
  ModuleSum out;
  switch (which) {
    case PartitionModule::lambda: out = alg.regular_module(); break;
    case PartitionModule::dlambda: out = alg.injective_cogenerator(); break;
    case PartitionModule::both: {
      out = alg.regular_module();
      ModuleSum inj = alg.injective_cogenerator();
      out.insert(out.end(), inj.begin(), inj.end());
      break;
    }
    case PartitionModule::injnp: {
      std::set<IntervalModule> proj;
      for (int v = 0; v < alg.vertex_count(); ++v) proj.insert(alg.projective_cover(v));
      for (const IntervalModule& e : alg.injective_cogenerator())
        if (!proj.count(e)) out.push_back(e);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const char* to_string(PartitionModule which) {
  switch (which) {
    case PartitionModule::both: return "lambda+dlambda";
    case PartitionModule::lambda: return "lambda";
    case PartitionModule::dlambda: return "dlambda";
    case PartitionModule::injnp: return "injectives-nonprojective";
  }
  return "?";
}

LatticeReport make_lattice_report(const TorsLattice& lat, const Classifier& cls,
                                  PartitionModule which) {
  LatticeReport report;
  report.lattice = &lat;
  report.classification = cls.classify_all();
  report.module_choice = which;
  report.module_summands = partition_module(lat.algebra(), which);
  report.partition = lat.partition_by(report.module_summands);
  return report;
}

namespace {

std::vector<int> bits_to_ids(std::uint64_t bits) {
  std::vector<int> out;
  while (bits) {
    out.push_back(std::countr_zero(bits));
    bits &= bits - 1;
  }
  return out;
}

}  // namespace

nlohmann::ordered_json lattice_to_json(const LatticeReport& report) {
  using json = nlohmann::ordered_json;
  const TorsLattice& lat = *report.lattice;
  const SerialAlgebra& alg = lat.algebra();

  json j;
  j["schema"] = 1;

  json jalg;
  jalg["summary"] = alg.base().summary();
  jalg["vertices"] = alg.base().quiver().labels();
  jalg["cyclic"] = alg.cyclic();
  jalg["kupisch"] = alg.kupisch_series();
  if (auto g = alg.global_dimension())
    jalg["gldim"] = *g;
  else
    jalg["gldim"] = "infinite";
  j["algebra"] = std::move(jalg);

  json jind = json::array();
  for (const IntervalModule& x : lat.indecomposables()) {
    json ji;
    ji["id"] = alg.indec_index(x);
    ji["top"] = alg.base().quiver().label_of(x.top);
    ji["len"] = x.len;
    ji["name"] = alg.module_name(x);
    jind.push_back(std::move(ji));
  }
  j["indecomposables"] = std::move(jind);

  json jpairs = json::array();
  for (int p = 0; p < lat.size(); ++p) {
    const Verdict& v = report.classification.verdicts[static_cast<std::size_t>(p)];
    json jp;
    jp["id"] = p;
    jp["torsion"] = bits_to_ids(lat.pair(p).torsion);
    jp["free"] = bits_to_ids(lat.pair(p).free);
    jp["verdict"] = to_string(v.status);
    jp["reason"] = to_string(v.reason);
    jpairs.push_back(std::move(jp));
  }
  j["pairs"] = std::move(jpairs);

  json jcov = json::array();
  for (const auto& [lo, hi] : lat.covers()) jcov.push_back(json::array({lo, hi}));
  j["covers"] = std::move(jcov);
  j["bottom"] = lat.bottom();
  j["top"] = lat.top();

  json jeps;
  jeps["module"] = to_string(report.module_choice);
  json jsum = json::array();
  for (const IntervalModule& x : report.module_summands) jsum.push_back(alg.module_name(x));
  jeps["summands"] = std::move(jsum);
  json jcls = json::array();
  for (const EpsilonClass& cls : report.partition) {
    json jc;
    jc["profile"] = cls.profile;
    jc["members"] = cls.members;
    jc["min"] = cls.min_pair;
    jc["max"] = cls.max_pair;
    jcls.push_back(std::move(jc));
  }
  jeps["classes"] = std::move(jcls);
  j["epsilon"] = std::move(jeps);

  json jsummary;
  jsummary["pairs_total"] = lat.size();
  jsummary["yes"] = report.classification.yes_count;
  jsummary["no"] = report.classification.no_count;
  jsummary["unknown"] = report.classification.unknown_count;
  json jreasons;
  for (const auto& [key, count] : report.classification.counts)
    jreasons[std::string(to_string(key.first)) + "/" + to_string(key.second)] = count;
  jsummary["by_reason"] = std::move(jreasons);
  jsummary["torsd_union_of_maximal_chains"] =
      report.classification.torsd_union_of_maximal_chains;
  if (report.classification.partition_homogeneous)
    jsummary["partition_homogeneous"] = *report.classification.partition_homogeneous;
  if (report.classification.upper_set_ok)
    jsummary["upper_set_ok"] = *report.classification.upper_set_ok;
  if (report.classification.lower_set_ok)
    jsummary["lower_set_ok"] = *report.classification.lower_set_ok;
  j["summary"] = std::move(jsummary);
  return j;
}

std::string lattice_to_dot(const LatticeReport& report) {
  const TorsLattice& lat = *report.lattice;
  std::ostringstream os;
  os << "graph tors_lattice {\n";
  os << "  node [shape=circle, style=filled, fontsize=10];\n";
  for (std::size_t c = 0; c < report.partition.size(); ++c) {
    const EpsilonClass& cls = report.partition[c];
    os << "  subgraph cluster_" << c << " {\n";
    os << "    style=dashed;\n";
    for (int p : cls.members) {
      const Verdict& v = report.classification.verdicts[static_cast<std::size_t>(p)];
      const char* fill = v.status == Status::yes ? "black"
                         : v.status == Status::no ? "white"
                                                  : "gray";
      const char* font = v.status == Status::yes ? "white" : "black";
      os << "    n" << p << " [label=\"" << p << "\", fillcolor=" << fill
         << ", fontcolor=" << font << "];\n";
    }
    os << "  }\n";
  }
  for (const auto& [lo, hi] : lat.covers()) os << "  n" << lo << " -- n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string lattice_to_text(const LatticeReport& report) {
  const TorsLattice& lat = *report.lattice;
  const SerialAlgebra& alg = lat.algebra();
  std::ostringstream os;
  os << "algebra: " << alg.base().summary() << "\n";
  os << "kupisch: [";
  for (int v = 0; v < alg.vertex_count(); ++v) {
    if (v) os << ", ";
    os << alg.kupisch(v);
  }
  os << "]  cyclic: " << (alg.cyclic() ? "yes" : "no") << "  gldim: ";
  if (auto g = alg.global_dimension())
    os << *g;
  else
    os << "infinite";
  os << "\n";
  os << "indecomposables: " << lat.indecomposables().size() << "\n";
  os << "pairs: " << lat.size() << "\n";
  os << "verdicts: yes=" << report.classification.yes_count
     << " no=" << report.classification.no_count
     << " unknown=" << report.classification.unknown_count << "\n";
  for (const auto& [key, count] : report.classification.counts)
    os << "  " << to_string(key.first) << "(" << to_string(key.second) << "): " << count << "\n";
  os << "tors^d union of maximal chains: "
     << (report.classification.torsd_union_of_maximal_chains ? "yes" : "no") << "\n";
  if (report.classification.partition_homogeneous)
    os << "epsilon classes verdict-homogeneous: "
       << (*report.classification.partition_homogeneous ? "yes" : "no") << "\n";
  if (report.classification.upper_set_ok)
    os << "upper-set check (generator side): "
       << (*report.classification.upper_set_ok ? "ok" : "FAILED") << "\n";
  if (report.classification.lower_set_ok)
    os << "lower-set check (cogenerator side): "
       << (*report.classification.lower_set_ok ? "ok" : "FAILED") << "\n";
  os << "epsilon partition by " << to_string(report.module_choice) << " = "
     << alg.module_sum_name(report.module_summands) << ": " << report.partition.size()
     << " classes\n";
  for (std::size_t c = 0; c < report.partition.size(); ++c) {
    const EpsilonClass& cls = report.partition[c];
    os << "  class " << c << ": members";
    for (int p : cls.members) os << " " << p;
    os << "  interval [" << cls.min_pair << ", " << cls.max_pair << "]\n";
  }
  os << "pair table (id: torsion-set | verdict):\n";
  for (int p = 0; p < lat.size(); ++p) {
    const Verdict& v = report.classification.verdicts[static_cast<std::size_t>(p)];
    os << "  " << p << ": {";
    bool first = true;
    for (int i = 0; i < lat.tables().m; ++i)
      if (lat.pair(p).torsion >> i & 1ull) {
        if (!first) os << ", ";
        first = false;
        os << alg.module_name(lat.indecomposables()[static_cast<std::size_t>(i)]);
      }
    os << "} | " << to_string(v.status) << " (" << to_string(v.reason) << ")\n";
  }
  return os.str();
}

}  // namespace torslab
