#include <doctest.h>

#include <map>

#include "gen.hpp"
#include "kshadow/weyl.hpp"

using namespace kshadow;

namespace {

// Independent tables, not derived from the closure algorithm.
int known_positive_count(char f, int n) {
  switch (f) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

int known_weyl_order(char f, int n) {
  static const std::map<std::pair<char, int>, int> t = {
      {{'A', 1}, 2}, {{'A', 2}, 6}, {{'A', 3}, 24}, {{'A', 4}, 120}, {{'B', 2}, 8}, {{'B', 3}, 48},
      {{'B', 4}, 384}, {{'C', 2}, 8}, {{'C', 3}, 48}, {{'C', 4}, 384}, {{'D', 4}, 192}, {{'F', 4}, 1152},
      {{'G', 2}, 12}};
  return t.at({f, n});
}

int coxeter_from_cartan(int aij, int aji) {
  switch (aij * aji) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  return -1;
}

const std::vector<std::pair<char, int>> kTypes = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
                                                  {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}};

}  // namespace

TEST_CASE("root counts match the classification") {
  for (char f : std::string("ABCDEFG"))
    for (int n = 1; n <= 8; ++n) {
      if (!RootDatum::valid_type(f, n)) continue;
      const RootDatum rd(f, n);
      CHECK_MESSAGE(rd.num_positive() == known_positive_count(f, n), rd.label());
    }
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(RootDatum('A', 0), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum('B', 1), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum('E', 5), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum('G', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum('H', 2), std::invalid_argument);
}

TEST_CASE("small examples") {
  const RootDatum a1('A', 1), a2('A', 2), g2('G', 2), b2('B', 2);
  CHECK(a1.num_positive() == 1);
  CHECK(WeylGroup(a1).order() == 2);
  CHECK(a2.num_positive() == 3);
  CHECK(a2.positive_roots() == std::vector<RootVector>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(g2.num_positive() == 6);
  CHECK(WeylGroup(g2).order() == 12);
  CHECK(a1.pair(0, a1.coroot(0)) == 2);
  CHECK(a2.cartan(1, 0) == -1);
  CHECK(a2.pair(a2.simple_index(1), a2.simple_coroot(0)) == -1);

  const WeylGroup w2(a2), wb(b2);
  CHECK(w2.length(w2.longest()) == 3);
  CHECK(wb.order() == 8);
  CHECK(wb.length(wb.longest()) == 4);

  // rho^vee = a1^vee + a2^vee in A2.
  const LatticeVector rho{1, 1};
  CHECK(a2.pair(RootVector{1, 1}, rho) == 2);
  CHECK(w2.act(w2.longest(), rho) == -rho);
  const auto s1 = w2.simple(0);
  CHECK(w2.act(s1, a2.simple_coroot(0)) == -a2.simple_coroot(0));
  CHECK(WeylGroup(a1).act(1, a1.coroot(0)) == -a1.coroot(0));
}

TEST_CASE("cartan matrices are valid and symmetrizable") {
  for (auto [f, n] : kTypes) {
    const RootDatum rd(f, n);
    for (int i = 0; i < n; ++i) {
      CHECK(rd.cartan(i, i) == 2);
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        CHECK(rd.cartan(i, j) <= 0);
        CHECK((rd.cartan(i, j) == 0) == (rd.cartan(j, i) == 0));
      }
    }
    // Symmetrizable: a_ij a_jk a_ki = a_ik a_kj a_ji for every triple.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          CHECK(rd.cartan(i, j) * rd.cartan(j, k) * rd.cartan(k, i) ==
                rd.cartan(i, k) * rd.cartan(k, j) * rd.cartan(j, i));
  }
}

TEST_CASE("Weyl group orders, reduced words and inversion counts") {
  for (auto [f, n] : kTypes) {
    for (auto mode : {LatticeMode::kSimplyConnected, LatticeMode::kAdjoint}) {
      const RootDatum rd(f, n, mode);
      const WeylGroup w(rd);
      REQUIRE(w.order() == known_weyl_order(f, n));
      for (int v = 0; v < w.order(); ++v) {
        int inv = 0;
        for (int k = 0; k < rd.num_positive(); ++k) {
          // Independent inversion count: act on the root vector directly.
          RootVector beta = rd.root(k);
          for (auto it = w[v].word.rbegin(); it != w[v].word.rend(); ++it) beta = rd.reflect_root(*it, beta);
          const bool negative = std::any_of(beta.coords().begin(), beta.coords().end(), [](int c) { return c < 0; });
          inv += negative;
        }
        CHECK(inv == static_cast<int>(w[v].word.size()));
        CHECK(w.length(v) == inv);
      }
    }
  }
  CHECK_THROWS_AS(WeylGroup(RootDatum('B', 5)), std::invalid_argument);
  CHECK(WeylGroup(RootDatum('B', 5), 5).order() == 3840);
}

TEST_CASE("braid relations follow the Cartan matrix") {
  for (auto [f, n] : kTypes) {
    const RootDatum rd(f, n);
    const WeylGroup w(rd);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int m = i == j ? 1 : coxeter_from_cartan(rd.cartan(i, j), rd.cartan(j, i));
        CHECK(w.coxeter_order(i, j) == m);
      }
  }
}

TEST_CASE("reflections are involutions on random vectors") {
  testgen::Rng rng(7);
  for (auto [f, n] : kTypes)
    for (auto mode : {LatticeMode::kSimplyConnected, LatticeMode::kAdjoint}) {
      const RootDatum rd(f, n, mode);
      for (int i = 0; i < n; ++i)
        for (int t = 0; t < 200; ++t) {
          const auto v = testgen::lattice(rng, rd, 9);
          const auto s = rd.reflect(i, v);
          CHECK(rd.reflect(i, s) == v);
          // s(lambda) = lambda - <alpha_i, lambda> alpha_i^vee
          CHECK(s == v - static_cast<int>(rd.pair(rd.simple_index(i), v)) * rd.simple_coroot(i));
        }
    }
}

TEST_CASE("2rho is the sum of positive roots and pairs through heights") {
  for (auto [f, n] : kTypes) {
    const RootDatum rd(f, n);
    RootVector sum(static_cast<std::size_t>(n));
    for (const auto& a : rd.positive_roots()) sum += a;
    CHECK(rd.two_rho() == sum);
    testgen::Rng rng(11);
    for (int t = 0; t < 20; ++t) {
      const auto v = testgen::lattice(rng, rd, 5);
      std::int64_t s = 0;
      for (int k = 0; k < rd.num_positive(); ++k) s += rd.pair(k, v);
      CHECK(rd.pair_two_rho(v) == s);
    }
  }
}

TEST_CASE("lattice modes and coordinate conversions") {
  const RootDatum sc('A', 2), adj('A', 2, LatticeMode::kAdjoint);
  // Adjoint coordinates are the simple pairings themselves.
  CHECK(adj.simple_pairings(LatticeVector{3, -1}) == std::vector<std::int64_t>{3, -1});
  // The fundamental coweight is not in the coroot lattice of SL3.
  const std::vector<std::int64_t> p{1, 0};
  CHECK_FALSE(sc.from_pairings(p).has_value());
  REQUIRE(adj.from_pairings(p).has_value());
  CHECK(*adj.from_pairings(p) == LatticeVector{1, 0});
  const std::vector<std::int64_t> q{2, -1};
  CHECK(*sc.from_pairings(q) == LatticeVector{1, 0});
  CHECK(sc.fingerprint() != adj.fingerprint());
  CHECK(parse_lattice_mode("adjoint") == LatticeMode::kAdjoint);
  CHECK_THROWS(parse_lattice_mode("other"));
  CHECK_THROWS_AS(sc.pair(0, LatticeVector{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("Bruhat order basics") {
  const WeylGroup w(RootDatum('A', 2));
  for (int v = 0; v < w.order(); ++v) {
    CHECK(w.bruhat_leq(0, v));
    CHECK(w.bruhat_leq(v, w.longest()));
    CHECK(w.bruhat_leq(v, v));
  }
  CHECK_FALSE(w.bruhat_leq(w.simple(0), w.simple(1)));
}

TEST_CASE("cached words rebuild the same group") {
  const RootDatum rd('B', 3);
  const WeylGroup w(rd);
  std::vector<std::vector<int>> words;
  for (const auto& e : w.elements()) words.push_back(e.word);
  const auto v = WeylGroup::from_words(rd, words);
  REQUIRE(v.order() == w.order());
  for (int i = 0; i < w.order(); ++i) {
    CHECK(v[i].matrix == w[i].matrix);
    CHECK(v[i].root_perm == w[i].root_perm);
  }
  words.pop_back();
  CHECK_THROWS(WeylGroup::from_words(rd, words));
  auto bad = words;
  bad[1] = {0, 0};
  CHECK_THROWS(WeylGroup::from_words(rd, bad));
}
