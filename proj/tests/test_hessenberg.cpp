#include <doctest.h>

#include <algorithm>
#include <set>

#include "gen.hpp"
#include "kshadow/affine_weyl.hpp"
#include "kshadow/hessenberg.hpp"

using namespace kshadow;

namespace {

const std::vector<std::pair<char, int>> kRank2 = {{'A', 1}, {'A', 2}, {'B', 2}, {'C', 2}, {'G', 2}};

// V \ B in alcove form: roots alpha with 0 < <lambda - x, alpha> < 1, x the alcove barycenter.
std::set<int> alcove_difference(const RootDatum& rd, const LatticeVector& lambda) {
  std::set<int> out;
  for (int k = 0; k < rd.num_roots(); ++k) {
    const Rational v = Rational(rd.pair(k, lambda)) - rd.barycenter_pairing(k);
    if (v > Rational(0) && v < Rational(1)) out.insert(k);
  }
  return out;
}

std::vector<int> sorted_cells(const HessenbergDatum& h) {
  auto c = h.cells;
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

TEST_CASE("Borel and Hessenberg roots: examples") {
  const RootDatum a1('A', 1), a2('A', 2);
  const auto p1 = root_pairings(a1, LatticeVector{1});
  CHECK(borel_roots(a1, p1) == std::vector<int>{a1.root_index(RootVector{-1})});
  CHECK(hessenberg_roots(a1, p1) == std::vector<int>{a1.root_index(RootVector{-1})});
  CHECK(is_isolated(a1, p1));

  const auto p2 = root_pairings(a2, LatticeVector{1, 0});
  std::vector<int> expect{a2.root_index(RootVector{0, 1}), a2.root_index(RootVector{-1, 0}),
                          a2.root_index(RootVector{-1, -1})};
  std::sort(expect.begin(), expect.end());
  CHECK(borel_roots(a2, p2) == expect);

  const auto p0 = root_pairings(a2, a2.zero());
  CHECK(hessenberg_roots(a2, p0).size() == 6);
}

TEST_CASE("GL3 example: blow-up of the plane in three points") {
  const WeylGroup w(RootDatum('A', 2));
  const std::vector<std::int64_t> gl{-1, 0, 1};
  const auto p = gl_root_pairings(w.root_datum(), gl);
  const auto h = hessenberg_datum(w, p);
  CHECK(h.dim == 2);
  CHECK_FALSE(h.isolated);
  CHECK(h.betti == std::vector<std::int64_t>{1, 4, 1});
  CHECK(sorted_cells(h) == std::vector<int>{0, 1, 1, 1, 1, 2});
  // Every root except the e3 - e1 block.
  const int missing = w.root_datum().root_index(RootVector{1, 1});
  CHECK(h.hess_roots.size() == 5);
  CHECK(std::find(h.hess_roots.begin(), h.hess_roots.end(), missing) == h.hess_roots.end());
  CHECK_THROWS_AS(gl_root_pairings(w.root_datum(), std::vector<std::int64_t>{1, 2}), std::invalid_argument);
}

TEST_CASE("lambda = 0 gives the flag variety") {
  for (auto [f, n] : kRank2) {
    const WeylGroup w(RootDatum(f, n));
    const auto h = hessenberg_datum(w, w.root_datum().zero());
    CHECK(h.dim == w.root_datum().num_positive());
    std::vector<std::int64_t> bruhat(h.dim + 1, 0);
    for (int v = 0; v < w.order(); ++v) ++bruhat[w.length(v)];
    CHECK(h.betti == bruhat);
  }
  const WeylGroup a2(RootDatum('A', 2));
  CHECK(poincare_polynomial(a2, a2.root_datum().zero()) == std::vector<std::int64_t>{1, 2, 2, 1});
}

TEST_CASE("isolated lambda gives |W| points") {
  const WeylGroup a1(RootDatum('A', 1));
  CHECK(poincare_polynomial(a1, LatticeVector{1}) == std::vector<std::int64_t>{2});
  for (auto [f, n] : kRank2) {
    // Twice rho^vee in fundamental-coweight coordinates: every positive root pairs to at least 2.
    const WeylGroup w(RootDatum(f, n, LatticeMode::kAdjoint));
    LatticeVector l(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) l[i] = 2;
    const auto h = hessenberg_datum(w, l);
    REQUIRE(h.isolated);
    CHECK(h.dim == 0);
    CHECK(h.betti == std::vector<std::int64_t>{w.order()});
  }
}

TEST_CASE("exhaustive rank <= 2 window: fixed points, closure, paving, alcove form") {
  for (auto [f, n] : kRank2)
    for (auto mode : {LatticeMode::kSimplyConnected, LatticeMode::kAdjoint}) {
      const WeylGroup w(RootDatum(f, n, mode));
      const auto& rd = w.root_datum();
      for (const auto& l : lattice_window(rd, 3)) {
        const auto h = hessenberg_datum(w, l);
        std::int64_t euler = 0;
        for (auto b : h.betti) {
          CHECK(b >= 0);
          euler += b;
        }
        CHECK(euler == w.order());
        CHECK(static_cast<int>(h.cells.size()) == w.order());
        REQUIRE(static_cast<int>(h.betti.size()) == h.dim + 1);
        CHECK(h.betti.back() >= 1);
        // Smooth and projective, so Poincare duality makes the Betti numbers palindromic.
        CHECK(std::equal(h.betti.begin(), h.betti.end(), h.betti.rbegin()));
        CHECK(h.dim <= rd.num_positive());

        const std::set<int> hs(h.hess_roots.begin(), h.hess_roots.end()), bs(h.borel_roots.begin(), h.borel_roots.end());
        CHECK(std::includes(hs.begin(), hs.end(), bs.begin(), bs.end()));
        CHECK(static_cast<int>(bs.size()) == rd.num_positive());
        for (int a : hs)
          for (int b : bs) {
            const int s = rd.root_index(rd.root(a) + rd.root(b));
            if (s >= 0) CHECK(hs.contains(s));
          }
        std::set<int> diff;
        std::set_difference(hs.begin(), hs.end(), bs.begin(), bs.end(), std::inserter(diff, diff.end()));
        CHECK(diff == alcove_difference(rd, l));
        CHECK(h.dim == static_cast<int>(diff.size()));
        CHECK(h.isolated == (h.dim == 0));

        bool all01 = true;
        for (int k = 0; k < rd.num_positive(); ++k) all01 &= rd.pair(k, l) == 0 || rd.pair(k, l) == 1;
        CHECK((h.dim == rd.num_positive()) == all01);
      }
    }
}

TEST_CASE("lambda -> -w0 lambda preserves the cell multiset") {
  for (auto [f, n] : kRank2) {
    const WeylGroup w(RootDatum(f, n, LatticeMode::kAdjoint));
    for (const auto& l : lattice_window(w.root_datum(), 2)) {
      const auto dual = -w.act(w.longest(), l);
      CHECK(sorted_cells(hessenberg_datum(w, l)) == sorted_cells(hessenberg_datum(w, dual)));
    }
  }
}

TEST_CASE("Hessenberg data are not W-equivariant in lambda") {
  const WeylGroup a1(RootDatum('A', 1, LatticeMode::kAdjoint));
  CHECK(hessenberg_dim(a1, LatticeVector{1}) == 1);
  CHECK(hessenberg_dim(a1, LatticeVector{-1}) == 0);
  const WeylGroup a2(RootDatum('A', 2));
  const auto rho = gl_root_pairings(a2.root_datum(), std::vector<std::int64_t>{-1, 0, 1});
  const auto neg = gl_root_pairings(a2.root_datum(), std::vector<std::int64_t>{1, 0, -1});
  CHECK(hessenberg_datum(a2, rho).dim == 2);
  CHECK(hessenberg_datum(a2, neg).dim == 0);
}
