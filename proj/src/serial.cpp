#include "torslab/serial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace torslab {

SerialAlgebra::SerialAlgebra(AlgebraPresentation base) : base_(std::move(base)) {
  const Quiver& q = base_.quiver();
  int n = q.vertex_count();
  next_.assign(static_cast<std::size_t>(n), -1);
  prev_.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (q.out_arrows(v).size() > 1 || q.in_arrows(v).size() > 1)
      throw PreconditionError("algebra is not serial: vertex " +
                              std::to_string(q.label_of(v)) +
                              " has multiple incoming or outgoing arrows");
    if (!q.out_arrows(v).empty()) next_[static_cast<std::size_t>(v)] = q.arrow(q.out_arrows(v)[0]).dst;
    if (!q.in_arrows(v).empty()) prev_[static_cast<std::size_t>(v)] = q.arrow(q.in_arrows(v)[0]).src;
  }
  // connected + degree bounds forces a chain (n-1 arrows) or a cycle (n).
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : {next_[static_cast<std::size_t>(v)], prev_[static_cast<std::size_t>(v)]}) {
      if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n)
    throw PreconditionError("algebra is not serial: quiver is disconnected");
  cyclic_ = q.arrow_count() == n;
  if (q.arrow_count() != n && q.arrow_count() != n - 1)
    throw PreconditionError("algebra is not serial: unexpected arrow count");

  kupisch_.assign(static_cast<std::size_t>(n), 1);
  for (const Path& p : base_.nonzero_paths())
    kupisch_[static_cast<std::size_t>(p.src)] =
        std::max(kupisch_[static_cast<std::size_t>(p.src)], p.length() + 1);
  for (int v = 0; v < n; ++v) {
    int w = next_[static_cast<std::size_t>(v)];
    if (w >= 0 && kupisch(v) > kupisch(w) + 1)
      throw std::logic_error("Kupisch series violates c_v <= c_{next(v)} + 1");
  }
}

int SerialAlgebra::step(int v, int k) const {
  int u = v;
  for (int i = 0; i < k; ++i) {
    u = next_[static_cast<std::size_t>(u)];
    if (u < 0) throw std::logic_error("step walked off the end of the chain");
  }
  return u;
}

bool SerialAlgebra::valid_module(const IntervalModule& m) const {
  return m.top >= 0 && m.top < vertex_count() && m.len >= 1 && m.len <= kupisch(m.top);
}

int SerialAlgebra::vertex_at(const IntervalModule& m, int k) const {
  if (k < 0 || k >= m.len) throw std::logic_error("composition factor index out of range");
  return step(m.top, k);
}

std::vector<IntervalModule> SerialAlgebra::indecomposables() const {
  std::vector<IntervalModule> out;
  for (int v = 0; v < vertex_count(); ++v)
    for (int len = 1; len <= kupisch(v); ++len) out.push_back(IntervalModule{v, len});
  return out;
}

int SerialAlgebra::indec_index(const IntervalModule& m) const {
  if (!valid_module(m)) throw ValidationError("not a module of this algebra");
  int idx = 0;
  for (int v = 0; v < m.top; ++v) idx += kupisch(v);
  return idx + m.len - 1;
}

int SerialAlgebra::hom_dim(const IntervalModule& u, const IntervalModule& v) const {
  if (!valid_module(u) || !valid_module(v)) throw ValidationError("not a module of this algebra");
  int count = 0;
  for (int s = 1; s <= std::min(u.len, v.len); ++s)
    if (vertex_at(v, v.len - s) == u.top) ++count;
  return count;
}

std::optional<IntervalModule> SerialAlgebra::submodule_of_length(const IntervalModule& m,
                                                                 int s) const {
  if (!valid_module(m)) throw ValidationError("not a module of this algebra");
  if (s < 0 || s > m.len) throw ValidationError("submodule length out of range");
  if (s == 0) return std::nullopt;
  return IntervalModule{vertex_at(m, m.len - s), s};
}

std::optional<IntervalModule> SerialAlgebra::quotient_of_length(const IntervalModule& m,
                                                                int s) const {
  if (!valid_module(m)) throw ValidationError("not a module of this algebra");
  if (s < 0 || s > m.len) throw ValidationError("quotient length out of range");
  if (s == 0) return std::nullopt;
  return IntervalModule{m.top, s};
}

bool SerialAlgebra::in_gen(std::span<const IntervalModule> c, const IntervalModule& x) const {
  for (const IntervalModule& u : c)
    if (u.top == x.top && u.len >= x.len) return true;
  return false;
}

bool SerialAlgebra::in_cogen(std::span<const IntervalModule> c, const IntervalModule& x) const {
  for (const IntervalModule& u : c)
    if (x.len <= u.len && vertex_at(u, u.len - x.len) == x.top) return true;
  return false;
}

int SerialAlgebra::trace_len(std::span<const IntervalModule> c, const IntervalModule& m) const {
  for (int s = m.len; s >= 1; --s)
    if (in_gen(c, *submodule_of_length(m, s))) return s;
  return 0;
}

int SerialAlgebra::reject_len(std::span<const IntervalModule> c, const IntervalModule& m) const {
  for (int s = 0; s <= m.len; ++s) {
    int q = m.len - s;
    if (q == 0 || in_cogen(c, IntervalModule{m.top, q})) return s;
  }
  return m.len;
}

ModuleSum SerialAlgebra::trace(std::span<const IntervalModule> c, const ModuleSum& m) const {
  ModuleSum out;
  for (const IntervalModule& x : m) {
    int s = trace_len(c, x);
    if (s > 0) out.push_back(*submodule_of_length(x, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ModuleSum SerialAlgebra::reject(std::span<const IntervalModule> c, const ModuleSum& m) const {
  ModuleSum out;
  for (const IntervalModule& x : m) {
    int s = reject_len(c, x);
    if (s > 0) out.push_back(*submodule_of_length(x, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntervalModule SerialAlgebra::injective_envelope(int v) const {
  // Longest interval with socle S_v; valid lengths are downward closed along
  // the predecessor walk, so scan until the Kupisch bound fails.
  IntervalModule best{v, 1};
  int u = v;
  int maxc = *std::max_element(kupisch_.begin(), kupisch_.end());
  for (int k = 1; k < maxc; ++k) {
    u = prev_[static_cast<std::size_t>(u)];
    if (u < 0) break;
    if (kupisch(u) >= k + 1)
      best = IntervalModule{u, k + 1};
    else
      break;
  }
  return best;
}

ModuleSum SerialAlgebra::regular_module() const {
  ModuleSum out;
  for (int v = 0; v < vertex_count(); ++v) out.push_back(projective_cover(v));
  std::sort(out.begin(), out.end());
  return out;
}

ModuleSum SerialAlgebra::injective_cogenerator() const {
  ModuleSum out;
  for (int v = 0; v < vertex_count(); ++v) out.push_back(injective_envelope(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> SerialAlgebra::global_dimension() const {
  int gldim = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    std::set<std::pair<int, int>> seen;
    IntervalModule m{v, 1};
    int pd = 0;
    while (m.len != kupisch(m.top)) {
      if (!seen.insert({m.top, m.len}).second) return std::nullopt;  // syzygy cycle
      m = IntervalModule{step(m.top, m.len), kupisch(m.top) - m.len};
      ++pd;
    }
    gldim = std::max(gldim, pd);
  }
  return gldim;
}

bool SerialAlgebra::self_injective() const {
  std::set<IntervalModule> proj, inj;
  for (int v = 0; v < vertex_count(); ++v) {
    proj.insert(projective_cover(v));
    inj.insert(injective_envelope(v));
  }
  return proj == inj;
}

std::string SerialAlgebra::module_name(const IntervalModule& m) const {
  std::ostringstream os;
  os << "M(" << base_.quiver().label_of(m.top) << "," << m.len << ")";
  return os.str();
}

std::string SerialAlgebra::module_sum_name(const ModuleSum& m) const {
  if (m.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << "+";
    os << module_name(m[i]);
  }
  return os.str();
}

}  // namespace torslab
