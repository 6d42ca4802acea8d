#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kshadow/weyl.hpp"

namespace kshadow {

/// Loop-rotation fixed component H(lambda) of the slope-one affine Springer
/// fiber. Everything depends on lambda only through its root pairings, which
/// lets GL_n coordinates be used without a lattice round trip.
struct HessenbergDatum {
  std::vector<std::int64_t> simple_pairings;
  std::vector<int> borel_roots;  // root indices, ascending
  std::vector<int> hess_roots;   // root indices, ascending
  int dim = 0;
  bool isolated = false;
  std::vector<int> cells;          // indexed by Weyl element
  std::vector<std::int64_t> betti;  // coefficient of q^k, k = 0..dim
};

/// <alpha_k, lambda> for every root index k.
std::vector<std::int64_t> root_pairings(const RootDatum& rd, const LatticeVector& lambda);
/// Root pairings for a GL_n coordinate vector (lambda_1, ..., lambda_n) in type A_{n-1},
/// with simple roots e_{i+1} - e_i.
std::vector<std::int64_t> gl_root_pairings(const RootDatum& rd, std::span<const std::int64_t> gl);

std::vector<int> borel_roots(const RootDatum& rd, std::span<const std::int64_t> pairings);
std::vector<int> hessenberg_roots(const RootDatum& rd, std::span<const std::int64_t> pairings);
bool is_isolated(const RootDatum& rd, std::span<const std::int64_t> pairings);

HessenbergDatum hessenberg_datum(const WeylGroup& w, std::span<const std::int64_t> pairings);
HessenbergDatum hessenberg_datum(const WeylGroup& w, const LatticeVector& lambda);

inline int hessenberg_dim(const WeylGroup& w, const LatticeVector& lambda) {
  return hessenberg_datum(w, lambda).dim;
}
inline std::vector<std::int64_t> poincare_polynomial(const WeylGroup& w, const LatticeVector& lambda) {
  return hessenberg_datum(w, lambda).betti;
}

}  // namespace kshadow
