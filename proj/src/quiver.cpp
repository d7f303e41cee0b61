#include "torslab/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace torslab {

int Quiver::add_vertex(int label) {
  labels_.push_back(label);
  out_.emplace_back();
  in_.emplace_back();
  return vertex_count() - 1;
}

int Quiver::add_arrow(std::string name, int src, int dst) {
  if (src < 0 || src >= vertex_count() || dst < 0 || dst >= vertex_count())
    throw ValidationError("arrow '" + name + "' has a dangling endpoint");
  for (const Arrow& a : arrows_)
    if (a.name == name) throw ValidationError("duplicate arrow name '" + name + "'");
  int id = arrow_count();
  arrows_.push_back(Arrow{std::move(name), src, dst});
  out_[static_cast<std::size_t>(src)].push_back(id);
  in_[static_cast<std::size_t>(dst)].push_back(id);
  return id;
}

std::optional<int> Quiver::vertex_of_label(int label) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (labels_[static_cast<std::size_t>(v)] == label) return v;
  return std::nullopt;
}

bool operator==(const Path& a, const Path& b) {
  return a.src == b.src && a.dst == b.dst && a.arrows == b.arrows;
}

bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.src < b.src;
}

namespace {

bool well_formed(const Quiver& q, const Path& p) {
  if (p.src < 0 || p.src >= q.vertex_count()) return false;
  if (p.dst < 0 || p.dst >= q.vertex_count()) return false;
  int at = p.src;
  for (int a : p.arrows) {
    if (a < 0 || a >= q.arrow_count()) return false;
    if (q.arrow(a).src != at) return false;
    at = q.arrow(a).dst;
  }
  return at == p.dst;
}

bool contains_factor(const std::vector<int>& word, const std::vector<int>& factor) {
  if (factor.empty() || factor.size() > word.size()) return false;
  for (std::size_t i = 0; i + factor.size() <= word.size(); ++i)
    if (std::equal(factor.begin(), factor.end(), word.begin() + static_cast<std::ptrdiff_t>(i)))
      return true;
  return false;
}

}  // namespace

AlgebraPresentation AlgebraPresentation::build(Quiver quiver, MonomialIdeal ideal,
                                               std::size_t path_cap) {
  if (quiver.vertex_count() == 0) throw ValidationError("quiver has no vertices");
  if (ideal.radical_power && *ideal.radical_power < 2)
    throw ValidationError("radical power must be at least 2");
  for (const auto& g : ideal.generators) {
    if (g.size() < 2) throw ValidationError("relation of length < 2 is not admissible");
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] < 0 || g[i] >= quiver.arrow_count())
        throw ValidationError("relation names an unknown arrow");
      if (i > 0 && quiver.arrow(g[i - 1]).dst != quiver.arrow(g[i]).src)
        throw ValidationError("relation arrows do not compose");
    }
  }

  AlgebraPresentation alg;
  alg.quiver_ = std::move(quiver);
  alg.ideal_ = std::move(ideal);

  std::deque<Path> queue;
  for (int v = 0; v < alg.quiver_.vertex_count(); ++v) queue.push_back(Path::trivial_at(v));
  std::vector<Path> found(queue.begin(), queue.end());
  while (!queue.empty()) {
    Path p = std::move(queue.front());
    queue.pop_front();
    for (int a : alg.quiver_.out_arrows(p.dst)) {
      Path q = p;
      q.arrows.push_back(a);
      q.dst = alg.quiver_.arrow(a).dst;
      if (!alg.is_nonzero(q)) continue;
      found.push_back(q);
      queue.push_back(std::move(q));
      if (found.size() > path_cap)
        throw CapExceeded("nonzero-path enumeration exceeds cap (" +
                          std::to_string(path_cap) +
                          "); the ideal is not admissible at this scale");
    }
  }
  std::sort(found.begin(), found.end(), path_less);
  alg.nonzero_paths_ = std::move(found);
  alg.from_vertex_.resize(static_cast<std::size_t>(alg.quiver_.vertex_count()));
  for (const Path& p : alg.nonzero_paths_)
    alg.from_vertex_[static_cast<std::size_t>(p.src)].push_back(p);
  return alg;
}

bool AlgebraPresentation::is_nonzero(const Path& p) const {
  if (!well_formed(quiver_, p)) throw ValidationError("path is not well-formed");
  if (ideal_.radical_power && p.length() >= *ideal_.radical_power) return false;
  for (const auto& g : ideal_.generators)
    if (contains_factor(p.arrows, g)) return false;
  return true;
}

const std::vector<Path>& AlgebraPresentation::nonzero_paths_from(int v) const {
  return from_vertex_.at(static_cast<std::size_t>(v));
}

std::vector<Path> AlgebraPresentation::tail_maximal_paths(int v) const {
  std::vector<Path> result;
  for (const Path& p : nonzero_paths_from(v)) {
    bool extendable = false;
    for (int a : quiver_.out_arrows(p.dst)) {
      Path q = p;
      q.arrows.push_back(a);
      q.dst = quiver_.arrow(a).dst;
      if (is_nonzero(q)) {
        extendable = true;
        break;
      }
    }
    if (!extendable) result.push_back(p);
  }
  return result;  // already in canonical order
}

std::vector<Path> AlgebraPresentation::head_maximal_paths(int v) const {
  std::vector<Path> result;
  for (const Path& p : nonzero_paths_) {
    if (p.dst != v) continue;
    bool extendable = false;
    for (int a : quiver_.in_arrows(p.src)) {
      Path q;
      q.src = quiver_.arrow(a).src;
      q.dst = p.dst;
      q.arrows.reserve(p.arrows.size() + 1);
      q.arrows.push_back(a);
      q.arrows.insert(q.arrows.end(), p.arrows.begin(), p.arrows.end());
      if (is_nonzero(q)) {
        extendable = true;
        break;
      }
    }
    if (!extendable) result.push_back(p);
  }
  return result;
}

bool AlgebraPresentation::is_acyclic_algebra() const {
  int n = quiver_.vertex_count();
  std::vector<std::vector<bool>> edge(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
  for (const Path& p : nonzero_paths_)
    if (!p.trivial()) edge[static_cast<std::size_t>(p.src)][static_cast<std::size_t>(p.dst)] = true;
  // 0 = unseen, 1 = on stack, 2 = done
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (state[static_cast<std::size_t>(start)] != 0) continue;
    stack.push_back(start);
    std::vector<int> iter(static_cast<std::size_t>(n), 0);
    state[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      int& w = iter[static_cast<std::size_t>(u)];
      bool advanced = false;
      while (w < n) {
        int t = w++;
        if (!edge[static_cast<std::size_t>(u)][static_cast<std::size_t>(t)]) continue;
        if (state[static_cast<std::size_t>(t)] == 1) return false;
        if (state[static_cast<std::size_t>(t)] == 0) {
          state[static_cast<std::size_t>(t)] = 1;
          stack.push_back(t);
          advanced = true;
          break;
        }
      }
      if (!advanced && w >= n) {
        state[static_cast<std::size_t>(u)] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

AlgebraPresentation AlgebraPresentation::reversed() const {
  Quiver q;
  for (int label : quiver_.labels()) q.add_vertex(label);
  for (const Arrow& a : quiver_.arrows()) q.add_arrow(a.name, a.dst, a.src);
  MonomialIdeal ideal;
  ideal.radical_power = ideal_.radical_power;
  for (const auto& g : ideal_.generators) {
    std::vector<int> rev(g.rbegin(), g.rend());
    ideal.generators.push_back(std::move(rev));
  }
  return build(std::move(q), std::move(ideal));
}

std::string AlgebraPresentation::path_to_string(const Path& p) const {
  std::ostringstream os;
  if (p.trivial()) {
    os << "e_" << quiver_.label_of(p.src);
    return os.str();
  }
  os << quiver_.label_of(p.src) << "~>" << quiver_.label_of(p.dst) << " (";
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) os << " ";
    os << quiver_.arrow(p.arrows[i]).name;
  }
  os << ")";
  return os.str();
}

std::string AlgebraPresentation::summary() const {
  std::ostringstream os;
  os << quiver_.vertex_count() << " vertices, " << quiver_.arrow_count() << " arrows, "
     << ideal_.generators.size() << " relations, radical ";
  if (ideal_.radical_power)
    os << *ideal_.radical_power;
  else
    os << "none";
  os << ", " << nonzero_paths_.size() << " nonzero paths";
  return os.str();
}

// ---------------------------------------------------------------------------
// quiver-spec parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
  std::string text;
  int col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#')
      ++j;
    toks.push_back(Token{line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return toks;
}

int parse_nonneg(const Token& t, int line) {
  if (t.text.empty()) throw ParseError(line, t.col, "expected an integer");
  for (char c : t.text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(line, t.col, "expected a nonnegative integer, got '" + t.text + "'");
  try {
    return std::stoi(t.text);
  } catch (const std::exception&) {
    throw ParseError(line, t.col, "integer out of range: '" + t.text + "'");
  }
}

}  // namespace

AlgebraPresentation parse_quiver_spec(std::string_view text, std::size_t path_cap) {
  Quiver q;
  MonomialIdeal ideal;
  std::map<int, int> vertex_by_label;
  std::map<std::string, int> arrow_by_name;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int last_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    last_line = lineno;
    const std::string& kw = toks[0].text;

    auto want = [&](std::size_t argc, const char* usage) {
      if (toks.size() != argc + 1)
        throw ParseError(lineno, toks[0].col, std::string("usage: ") + usage);
    };

    if (kw == "vertex") {
      want(1, "vertex <id> | vertex <a>..<b>");
      const std::string& body = toks[1].text;
      auto dots = body.find("..");
      int lo, hi;
      if (dots == std::string::npos) {
        lo = hi = parse_nonneg(toks[1], lineno);
      } else {
        Token a{body.substr(0, dots), toks[1].col};
        Token b{body.substr(dots + 2), toks[1].col + static_cast<int>(dots) + 2};
        lo = parse_nonneg(a, lineno);
        hi = parse_nonneg(b, lineno);
        if (lo > hi) throw ParseError(lineno, toks[1].col, "empty vertex range");
      }
      for (int label = lo; label <= hi; ++label) {
        if (vertex_by_label.count(label))
          throw ParseError(lineno, toks[1].col,
                           "vertex " + std::to_string(label) + " declared twice");
        vertex_by_label[label] = q.add_vertex(label);
      }
    } else if (kw == "arrow") {
      want(3, "arrow <name> <src> <dst>");
      const std::string& name = toks[1].text;
      if (arrow_by_name.count(name))
        throw ParseError(lineno, toks[1].col, "duplicate arrow name '" + name + "'");
      int src_label = parse_nonneg(toks[2], lineno);
      int dst_label = parse_nonneg(toks[3], lineno);
      auto s = vertex_by_label.find(src_label);
      if (s == vertex_by_label.end())
        throw ParseError(lineno, toks[2].col, "unknown vertex " + toks[2].text);
      auto d = vertex_by_label.find(dst_label);
      if (d == vertex_by_label.end())
        throw ParseError(lineno, toks[3].col, "unknown vertex " + toks[3].text);
      arrow_by_name[name] = q.add_arrow(name, s->second, d->second);
    } else if (kw == "relation") {
      if (toks.size() < 3)
        throw ParseError(lineno, toks[0].col,
                         "relation needs at least two arrows (admissibility)");
      std::vector<int> word;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto it = arrow_by_name.find(toks[i].text);
        if (it == arrow_by_name.end())
          throw ParseError(lineno, toks[i].col, "unknown arrow '" + toks[i].text + "'");
        if (!word.empty() && q.arrow(word.back()).dst != q.arrow(it->second).src)
          throw ParseError(lineno, toks[i].col,
                           "arrow '" + toks[i].text + "' does not compose with the previous one");
        word.push_back(it->second);
      }
      ideal.generators.push_back(std::move(word));
    } else if (kw == "radical") {
      want(1, "radical <N>");
      int n = parse_nonneg(toks[1], lineno);
      if (n < 2) throw ParseError(lineno, toks[1].col, "radical power must be at least 2");
      if (ideal.radical_power)
        throw ParseError(lineno, toks[0].col, "radical declared twice");
      ideal.radical_power = n;
    } else {
      throw ParseError(lineno, toks[0].col, "unknown directive '" + kw + "'");
    }
  }
  if (q.vertex_count() == 0)
    throw ParseError(last_line == 0 ? 1 : last_line, 1, "quiver has no vertices");
  return AlgebraPresentation::build(std::move(q), std::move(ideal), path_cap);
}

// ---------------------------------------------------------------------------
// presets
// ---------------------------------------------------------------------------

namespace {

Quiver numbered_vertices(int n) {
  Quiver q;
  for (int i = 1; i <= n; ++i) q.add_vertex(i);
  return q;
}

std::string arrow_name(int i) { return "a" + std::to_string(i); }

}  // namespace

AlgebraPresentation preset(const std::string& name, std::span<const int> params,
                           std::size_t path_cap) {
  auto expect = [&](std::size_t lo, std::size_t hi, const char* usage) {
    if (params.size() < lo || params.size() > hi)
      throw ValidationError(std::string("preset ") + name + ": usage " + usage);
  };
  if (name == "linear_an") {
    expect(1, 2, "linear_an:<n>[:<rad>]");
    int n = params[0];
    if (n < 1) throw ValidationError("linear_an: need n >= 1");
    Quiver q = numbered_vertices(n);
    for (int i = 1; i < n; ++i) q.add_arrow(arrow_name(i), i - 1, i);
    MonomialIdeal ideal;
    if (params.size() == 2) {
      if (params[1] < 2) throw ValidationError("linear_an: radical power must be >= 2");
      ideal.radical_power = params[1];
    }
    return AlgebraPresentation::build(std::move(q), std::move(ideal), path_cap);
  }
  if (name == "cyclic_radn") {
    expect(2, 2, "cyclic_radn:<vertices>:<rad>");
    int m = params[0], n = params[1];
    if (m < 1) throw ValidationError("cyclic_radn: need at least one vertex");
    if (n < 2) throw ValidationError("cyclic_radn: radical power must be >= 2");
    Quiver q = numbered_vertices(m);
    for (int i = 0; i < m; ++i) q.add_arrow(arrow_name(i + 1), i, (i + 1) % m);
    MonomialIdeal ideal;
    ideal.radical_power = n;
    return AlgebraPresentation::build(std::move(q), std::move(ideal), path_cap);
  }
  if (name == "star") {
    expect(2, 2, "star:<n>:<sinks>");
    int n = params[0], k = params[1];
    if (n < 2) throw ValidationError("star: need n >= 2");
    if (k < 1 || k > n - 1) throw ValidationError("star: sinks must lie in 1..n-1");
    // vertex 1 is the center; 2..k+1 are sinks; the rest point at the center.
    Quiver q = numbered_vertices(n);
    int next = 1;
    for (int s = 1; s <= k; ++s) q.add_arrow(arrow_name(next++), 0, s);
    for (int v = k + 1; v < n; ++v) q.add_arrow(arrow_name(next++), v, 0);
    return AlgebraPresentation::build(std::move(q), MonomialIdeal{}, path_cap);
  }
  if (name == "kronecker") {
    expect(1, 1, "kronecker:<arrows>");
    int r = params[0];
    if (r < 1) throw ValidationError("kronecker: need at least one arrow");
    Quiver q = numbered_vertices(2);
    for (int i = 1; i <= r; ++i) q.add_arrow(arrow_name(i), 0, 1);
    return AlgebraPresentation::build(std::move(q), MonomialIdeal{}, path_cap);
  }
  throw ValidationError("unknown preset '" + name + "'");
}

std::vector<std::array<std::string, 3>> preset_catalog() {
  return {
      {"linear_an", "linear_an:<n>[:<rad>]",
       "linearly oriented A_n, optionally with rad^N = 0"},
      {"cyclic_radn", "cyclic_radn:<vertices>:<rad>",
       "oriented cycle with rad^N = 0 (self-injective Nakayama)"},
      {"star", "star:<n>:<sinks>",
       "star-shaped quiver: center, <sinks> out-leaves, the rest in-leaves"},
      {"kronecker", "kronecker:<arrows>", "two vertices with parallel arrows"},
  };
}

}  // namespace torslab
