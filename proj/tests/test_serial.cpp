#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "torslab/serial.hpp"

using namespace torslab;

namespace {

SerialAlgebra a_n(int n) { return SerialAlgebra(preset("linear_an", std::vector<int>{n})); }
SerialAlgebra a_n_rad(int n, int r) {
  return SerialAlgebra(preset("linear_an", std::vector<int>{n, r}));
}
SerialAlgebra cyclic(int m, int r) {
  return SerialAlgebra(preset("cyclic_radn", std::vector<int>{m, r}));
}

}  // namespace

TEST_CASE("serial validation rejects branching and disconnected quivers") {
  CHECK_THROWS_AS(SerialAlgebra(preset("star", std::vector<int>{4, 2})), PreconditionError);
  CHECK_THROWS_AS(SerialAlgebra(preset("kronecker", std::vector<int>{2})), PreconditionError);
  Quiver q;
  q.add_vertex(1);
  q.add_vertex(2);
  CHECK_THROWS_AS(SerialAlgebra(AlgebraPresentation::build(std::move(q), MonomialIdeal{})),
                  PreconditionError);
}

TEST_CASE("Kupisch series") {
  CHECK(a_n(3).kupisch_series() == std::vector<int>{3, 2, 1});
  CHECK(a_n_rad(3, 2).kupisch_series() == std::vector<int>{2, 2, 1});
  CHECK(cyclic(2, 3).kupisch_series() == std::vector<int>{3, 3});
  for (const auto& alg : testing::serial_fleet(4, 4))
    for (int v = 0; v < alg.vertex_count(); ++v)
      if (alg.next(v) >= 0) CHECK(alg.kupisch(v) <= alg.kupisch(alg.next(v)) + 1);
}

TEST_CASE("indecomposable counts") {
  CHECK(a_n(3).indecomposables().size() == 6);
  CHECK(cyclic(2, 2).indecomposables().size() == 4);
  for (int n = 2; n <= 5; ++n) CHECK(cyclic(2, n).indecomposables().size() == 2u * n);
  // index round-trip
  auto alg = cyclic(3, 4);
  auto ind = alg.indecomposables();
  for (std::size_t i = 0; i < ind.size(); ++i)
    CHECK(alg.indec_index(ind[i]) == static_cast<int>(i));
}

TEST_CASE("hom dimensions on pinned examples") {
  auto a2 = a_n(2);
  IntervalModule p1{0, 2}, s1{0, 1}, s2{1, 1};
  CHECK(a2.hom_dim(p1, s1) == 1);
  CHECK(a2.hom_dim(s1, p1) == 0);
  CHECK(a2.hom_dim(p1, p1) == 1);
  CHECK(a2.hom_dim(s2, p1) == 1);

  auto l3 = cyclic(2, 3);
  CHECK(l3.hom_dim(IntervalModule{1, 1}, IntervalModule{0, 2}) == 1);  // soc M(1,2) = S_2
}

TEST_CASE("hom_dim matches the dense linear-algebra oracle on the fleet") {
  for (const auto& alg : testing::serial_fleet(4, 4)) {
    auto ind = alg.indecomposables();
    for (const auto& u : ind)
      for (const auto& v : ind) CHECK(alg.hom_dim(u, v) == testing::dense_hom_dim(alg, u, v));
  }
}

TEST_CASE("submodules and quotients of intervals") {
  auto a3 = a_n(3);
  IntervalModule p1{0, 3};
  CHECK(*a3.submodule_of_length(p1, 1) == IntervalModule{2, 1});
  CHECK(*a3.submodule_of_length(p1, 3) == p1);
  CHECK_FALSE(a3.submodule_of_length(p1, 0).has_value());
  CHECK(*a3.quotient_of_length(p1, 2) == IntervalModule{0, 2});
  CHECK_THROWS_AS(a3.submodule_of_length(p1, 4), ValidationError);

  auto l3 = cyclic(2, 3);
  CHECK(*l3.submodule_of_length(IntervalModule{0, 3}, 2) == IntervalModule{1, 2});
}

TEST_CASE("trace on pinned examples") {
  auto a2 = a_n(2);
  IntervalModule p1{0, 2}, s1{0, 1};
  CHECK(a2.trace(std::vector<IntervalModule>{s1}, ModuleSum{p1}).empty());
  auto all = a2.indecomposables();
  CHECK(a2.trace(all, ModuleSum{p1}) == ModuleSum{p1});

  auto l3 = cyclic(2, 3);
  ModuleSum got = l3.trace(std::vector<IntervalModule>{{0, 1}, {1, 1}}, ModuleSum{{0, 2}});
  CHECK(got == ModuleSum{IntervalModule{1, 1}});
}

TEST_CASE("trace is the largest submodule generated by the class") {
  for (const auto& alg : testing::serial_fleet(3, 3)) {
    auto ind = alg.indecomposables();
    int m = static_cast<int>(ind.size());
    if (m > 6) continue;
    for (std::uint64_t cmask = 0; cmask < (1ull << m); ++cmask) {
      std::vector<IntervalModule> c;
      for (int i = 0; i < m; ++i)
        if ((cmask >> i) & 1ull) c.push_back(ind[static_cast<std::size_t>(i)]);
      for (const auto& x : ind) {
        int tl = alg.trace_len(c, x);
        for (int s = tl + 1; s <= x.len; ++s) {
          // no member of c surjects onto a longer submodule
          IntervalModule sub = *alg.submodule_of_length(x, s);
          CHECK_FALSE(alg.in_gen(c, sub));
        }
      }
    }
  }
}

TEST_CASE("reject on pinned examples") {
  auto a2 = a_n(2);
  IntervalModule p1{0, 2}, s2{1, 1};
  auto all = a2.indecomposables();
  CHECK(a2.reject(all, ModuleSum{p1}).empty());
  CHECK(a2.reject(std::vector<IntervalModule>{s2}, ModuleSum{p1}) == ModuleSum{p1});
  CHECK(a2.reject(std::vector<IntervalModule>{}, ModuleSum{p1}) == ModuleSum{p1});
}

TEST_CASE("reject equals trace over the opposite algebra") {
  for (const auto& alg : testing::serial_fleet(3, 3)) {
    auto op = alg.opposite();
    auto dual = [&](const IntervalModule& x) {
      return IntervalModule{alg.socle_vertex(x), x.len};
    };
    auto ind = alg.indecomposables();
    int m = static_cast<int>(ind.size());
    if (m > 6) continue;
    for (std::uint64_t cmask = 0; cmask < (1ull << m); ++cmask) {
      std::vector<IntervalModule> c, cop;
      for (int i = 0; i < m; ++i)
        if ((cmask >> i) & 1ull) {
          c.push_back(ind[static_cast<std::size_t>(i)]);
          cop.push_back(dual(ind[static_cast<std::size_t>(i)]));
        }
      for (const auto& x : ind)
        CHECK(x.len - alg.reject_len(c, x) == op.trace_len(cop, dual(x)));
    }
  }
}

TEST_CASE("projective covers and injective envelopes") {
  auto a3 = a_n(3);
  CHECK(a3.projective_cover(0) == IntervalModule{0, 3});
  CHECK(a3.injective_envelope(0) == IntervalModule{0, 1});
  CHECK(a3.injective_envelope(2) == IntervalModule{0, 3});
  for (int n = 2; n <= 4; ++n) {
    auto l = cyclic(2, n);
    for (int v = 0; v < 2; ++v) CHECK(l.projective_cover(v) == IntervalModule{v, n});
  }
  // envelope really has the requested socle and maximal length
  for (const auto& alg : testing::serial_fleet(4, 4)) {
    for (int v = 0; v < alg.vertex_count(); ++v) {
      IntervalModule e = alg.injective_envelope(v);
      CHECK(alg.socle_vertex(e) == v);
      for (const auto& x : alg.indecomposables())
        if (alg.socle_vertex(x) == v) CHECK(x.len <= e.len);
    }
  }
}

TEST_CASE("global dimension") {
  for (int n = 2; n <= 5; ++n) CHECK(a_n(n).global_dimension() == 1);
  CHECK(a_n(1).global_dimension() == 0);
  CHECK(a_n_rad(3, 2).global_dimension() == 2);
  for (int n = 2; n <= 5; ++n) CHECK_FALSE(cyclic(2, n).global_dimension().has_value());
  CHECK(a_n_rad(4, 2).global_dimension() == 3);  // Omega chain S1 -> S2 -> S3 -> S4
}

TEST_CASE("self-injectivity") {
  for (int n = 2; n <= 5; ++n) CHECK(cyclic(2, n).self_injective());
  CHECK_FALSE(a_n(3).self_injective());
  CHECK(a_n(1).self_injective());
  CHECK(cyclic(1, 3).self_injective());  // k[x]/x^3
}

TEST_CASE("regular module and injective cogenerator") {
  auto a3 = a_n(3);
  CHECK(a3.regular_module() == ModuleSum{{0, 3}, {1, 2}, {2, 1}});
  CHECK(a3.injective_cogenerator() == ModuleSum{{0, 1}, {0, 2}, {0, 3}});
}
