// torslab: torsion pairs over monomial path algebras and the derived
// equivalences induced by their HRS-tilts.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "torslab/classify.hpp"
#include "torslab/export.hpp"
#include "torslab/phi.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace torslab;

struct CommonOpts {
  std::string preset_spec;
  std::string file;
  std::size_t cap_paths = kDefaultPathCap;
  int cap_subsets = 24;
  int cap_indec = 22;
  int jobs = 1;
  std::string format = "text";
  std::string set_csv;
};

void attach_input(CLI::App* cmd, CommonOpts& o, bool with_set) {
  cmd->add_option("--preset", o.preset_spec, "preset name:params, e.g. linear_an:3");
  cmd->add_option("--file", o.file, "quiver-spec file");
  cmd->add_option("--cap-paths", o.cap_paths, "nonzero-path enumeration cap");
  cmd->add_option("--cap-subsets", o.cap_subsets, "vertex-subset enumeration cap");
  cmd->add_option("--cap-indec", o.cap_indec, "indecomposable cap for lattice enumeration");
  cmd->add_option("--jobs", o.jobs, "worker threads for enumeration");
  cmd->add_option("--format", o.format, "text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  if (with_set) cmd->add_option("--set", o.set_csv, "comma-separated vertex labels");
}

AlgebraPresentation load_algebra(const CommonOpts& o) {
  if (!o.preset_spec.empty() && !o.file.empty())
    throw ValidationError("give either --preset or --file, not both");
  if (!o.preset_spec.empty()) {
    std::vector<std::string> parts;
    std::stringstream ss(o.preset_spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw ValidationError("empty preset spec");
    std::vector<int> params;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      try {
        params.push_back(std::stoi(parts[i]));
      } catch (const std::exception&) {
        throw ValidationError("preset parameter '" + parts[i] + "' is not an integer");
      }
    }
    return preset(parts[0], params, o.cap_paths);
  }
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw ValidationError("cannot open file '" + o.file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_quiver_spec(buf.str(), o.cap_paths);
  }
  throw ValidationError("no input: give --preset or --file");
}

SimpleSet parse_set(const AlgebraPresentation& alg, const std::string& csv) {
  SimpleSet s = SimpleSet::empty(alg.vertex_count());
  if (csv.empty()) return s;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int label;
    try {
      label = std::stoi(item);
    } catch (const std::exception&) {
      throw ValidationError("vertex label '" + item + "' is not an integer");
    }
    auto v = alg.quiver().vertex_of_label(label);
    if (!v) throw ValidationError("unknown vertex label " + item);
    s = s.with(*v);
  }
  return s;
}

std::vector<int> set_labels(const AlgebraPresentation& alg, const SimpleSet& s) {
  std::vector<int> out;
  for (int v = 0; v < s.n; ++v)
    if (s.contains(v)) out.push_back(alg.quiver().label_of(v));
  return out;
}

std::string labels_to_string(const std::vector<int>& labels) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ",";
    os << labels[i];
  }
  os << "}";
  return os.str();
}

int run_phi(const CommonOpts& o) {
  AlgebraPresentation alg = load_algebra(o);
  SimpleSet s = parse_set(alg, o.set_csv);
  SimpleSet plus = phi_plus(alg, s);
  SimpleSet minus = phi_minus(alg, s);
  if (o.format == "json") {
    json j;
    j["schema"] = 1;
    j["set"] = set_labels(alg, s);
    j["phi_plus"] = set_labels(alg, plus);
    j["phi_minus"] = set_labels(alg, minus);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "set    = " << labels_to_string(set_labels(alg, s)) << "\n";
    std::cout << "phi+   = " << labels_to_string(set_labels(alg, plus)) << "\n";
    std::cout << "phi-   = " << labels_to_string(set_labels(alg, minus)) << "\n";
  }
  return 0;
}

int run_check(const CommonOpts& o, const std::string& kind) {
  AlgebraPresentation alg = load_algebra(o);
  SimpleSet s = parse_set(alg, o.set_csv);
  HereditaryPairVerdict v = kind == "hereditary" ? hereditary_induces_de(alg, s)
                                                 : cohereditary_induces_de(alg, s);
  if (o.format == "json") {
    json j;
    j["schema"] = 1;
    j["kind"] = kind;
    j["set"] = set_labels(alg, s);
    j["induces_derived_equivalence"] = v.induces_de;
    if (v.witness) j["witness"] = alg.path_to_string(*v.witness);
    j["certificate"] = v.certificate;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "kind: " << kind << "  set: " << labels_to_string(set_labels(alg, s)) << "\n";
    std::cout << "induces derived equivalence: " << (v.induces_de ? "YES" : "NO") << "\n";
    if (v.witness) std::cout << "witness: " << alg.path_to_string(*v.witness) << "\n";
    std::cout << "certificate: " << v.certificate << "\n";
  }
  return 0;
}

int run_count(const CommonOpts& o, const std::string& kind, bool list) {
  AlgebraPresentation alg = load_algebra(o);
  CountOptions copts;
  copts.subset_cap = o.cap_subsets;
  copts.jobs = o.jobs;
  copts.list = list;
  CountResult r = count_de(
      alg, kind == "hereditary" ? PairKind::hereditary : PairKind::cohereditary, copts);
  auto mask_labels = [&](std::uint64_t mask) {
    return set_labels(alg, SimpleSet{mask, alg.vertex_count()});
  };
  if (o.format == "json") {
    json j;
    j["schema"] = 1;
    j["kind"] = kind;
    j["subsets_total"] = 1ull << alg.vertex_count();
    j["count"] = r.count;
    if (list) {
      json sets = json::array();
      for (std::uint64_t mask : r.sets) sets.push_back(mask_labels(mask));
      j["sets"] = std::move(sets);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.count << " of " << (1ull << alg.vertex_count()) << " " << kind
              << " pairs induce derived equivalence\n";
    if (list)
      for (std::uint64_t mask : r.sets)
        std::cout << "  " << labels_to_string(mask_labels(mask)) << "\n";
  }
  return 0;
}

int run_lattice(const CommonOpts& o, const std::string& module_choice) {
  AlgebraPresentation alg = load_algebra(o);
  SerialAlgebra serial(std::move(alg));
  EnumerateOptions eopts;
  eopts.indec_cap = o.cap_indec;
  eopts.jobs = o.jobs;
  TorsLattice lat = TorsLattice::enumerate(serial, eopts);
  PartitionModule which = PartitionModule::both;
  if (module_choice == "lambda") which = PartitionModule::lambda;
  else if (module_choice == "dlambda") which = PartitionModule::dlambda;
  else if (module_choice == "injnp") which = PartitionModule::injnp;
  Classifier cls(lat);
  LatticeReport report = make_lattice_report(lat, cls, which);
  if (o.format == "json")
    std::cout << lattice_to_json(report).dump(2) << "\n";
  else if (o.format == "dot")
    std::cout << lattice_to_dot(report);
  else
    std::cout << lattice_to_text(report);
  return 0;
}

int run_classify(const CommonOpts& o, const std::string& pairs_csv) {
  AlgebraPresentation alg = load_algebra(o);
  SerialAlgebra serial(std::move(alg));
  EnumerateOptions eopts;
  eopts.indec_cap = o.cap_indec;
  eopts.jobs = o.jobs;
  TorsLattice lat = TorsLattice::enumerate(serial, eopts);
  Classifier cls(lat);

  std::vector<int> which;
  if (pairs_csv.empty()) {
    for (int p = 0; p < lat.size(); ++p) which.push_back(p);
  } else {
    std::stringstream ss(pairs_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      int p;
      try {
        p = std::stoi(item);
      } catch (const std::exception&) {
        throw ValidationError("pair index '" + item + "' is not an integer");
      }
      if (p < 0 || p >= lat.size())
        throw ValidationError("pair index " + item + " out of range (lattice has " +
                              std::to_string(lat.size()) + " pairs)");
      which.push_back(p);
    }
  }

  if (o.format == "json") {
    json j;
    j["schema"] = 1;
    json arr = json::array();
    for (int p : which) {
      Verdict v = cls.classify(p);
      json jv;
      jv["pair"] = p;
      jv["verdict"] = to_string(v.status);
      jv["reason"] = to_string(v.reason);
      jv["detail"] = v.detail;
      arr.push_back(std::move(jv));
    }
    j["verdicts"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
  } else {
    for (int p : which) {
      Verdict v = cls.classify(p);
      std::cout << "pair " << p << ": " << to_string(v.status) << " (" << to_string(v.reason)
                << ") " << v.detail << "\n";
    }
  }
  return 0;
}

int run_presets() {
  for (const auto& row : preset_catalog())
    std::cout << row[1] << "\n    " << row[2] << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torsion pairs over monomial path algebras: phi criteria, Nakayama "
               "torsion lattices, derived-equivalence verdicts"};
  app.require_subcommand(1);

  CommonOpts phi_o, check_o, count_o, lattice_o, classify_o;
  std::string check_kind, count_kind;
  bool count_list = false;
  std::string lattice_module = "both";
  std::string classify_pairs;

  CLI::App* phi_cmd = app.add_subcommand("phi", "images of a simple set under phi+ / phi-");
  attach_input(phi_cmd, phi_o, true);

  CLI::App* check_cmd =
      app.add_subcommand("check", "derived-equivalence verdict for one (co)hereditary pair");
  attach_input(check_cmd, check_o, true);
  check_cmd->add_option("--kind", check_kind, "hereditary|cohereditary")
      ->required()
      ->check(CLI::IsMember({"hereditary", "cohereditary"}));

  CLI::App* count_cmd =
      app.add_subcommand("count", "count the vertex subsets inducing derived equivalence");
  attach_input(count_cmd, count_o, false);
  count_cmd->add_option("--kind", count_kind, "hereditary|cohereditary")
      ->required()
      ->check(CLI::IsMember({"hereditary", "cohereditary"}));
  count_cmd->add_flag("--list", count_list, "list the qualifying subsets");

  CLI::App* lattice_cmd =
      app.add_subcommand("lattice", "enumerate the torsion lattice of a serial algebra");
  attach_input(lattice_cmd, lattice_o, false);
  lattice_cmd->add_option("--module", lattice_module, "epsilon-partition module")
      ->check(CLI::IsMember({"both", "lambda", "dlambda", "injnp"}));

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "verdict per torsion pair of a serial algebra");
  attach_input(classify_cmd, classify_o, false);
  classify_cmd->add_option("--pair", classify_pairs, "comma-separated pair indices (default all)");

  CLI::App* presets_cmd = app.add_subcommand("presets", "list the built-in quiver presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (phi_cmd->parsed()) return run_phi(phi_o);
    if (check_cmd->parsed()) return run_check(check_o, check_kind);
    if (count_cmd->parsed()) return run_count(count_o, count_kind, count_list);
    if (lattice_cmd->parsed()) return run_lattice(lattice_o, lattice_module);
    if (classify_cmd->parsed()) return run_classify(classify_o, classify_pairs);
    if (presets_cmd->parsed()) return run_presets();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
