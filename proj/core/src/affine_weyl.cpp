#include "kshadow/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace kshadow {

AffineWeylElement AffineWeylGroup::affine_simple(int i) const {
  const auto& rd = root_datum();
  if (i < 0 || i > rd.rank()) throw std::out_of_range("affine simple reflection index");
  if (i > 0) return finite_element(w_->simple(i - 1));
  // s_theta as a Weyl element: conjugate a simple reflection onto theta.
  const int theta = rd.highest_root_index();
  for (int w = 0; w < w_->order(); ++w)
    for (int j = 0; j < rd.rank(); ++j)
      if (w_->act_root(w, rd.simple_index(j)) == theta) {
        const int s_theta = w_->multiply(w_->multiply(w, w_->simple(j)), w_->inverse(w));
        return {rd.coroot(theta), s_theta};
      }
  throw std::logic_error("highest root is not conjugate to a simple root");
}

AffineWeylElement AffineWeylGroup::multiply(const AffineWeylElement& a, const AffineWeylElement& b) const {
  return {a.translation + w_->act(a.finite, b.translation), w_->multiply(a.finite, b.finite)};
}

AffineWeylElement AffineWeylGroup::inverse(const AffineWeylElement& u) const {
  const int winv = w_->inverse(u.finite);
  return {-w_->act(winv, u.translation), winv};
}

int AffineWeylGroup::length(const AffineWeylElement& u) const {
  const auto& rd = root_datum();
  const int winv = w_->inverse(u.finite);
  std::int64_t len = 0;
  for (int k = 0; k < rd.num_positive(); ++k) {
    const std::int64_t p = rd.pair(k, u.translation);
    len += rd.is_positive_index(w_->act_root(winv, k)) ? std::llabs(p) : std::llabs(p - 1);
  }
  return static_cast<int>(len);
}

std::vector<AffineWeylElement> AffineWeylGroup::omega() const {
  const auto& rd = root_datum();
  const int r = rd.rank();
  std::vector<AffineWeylElement> out;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<std::int64_t> p(r);
    for (int i = 0; i < r; ++i) p[i] = (mask >> i) & 1;
    const auto lambda = rd.from_pairings(p);
    if (!lambda) continue;
    bool minuscule = true;
    for (int k = 0; k < rd.num_positive() && minuscule; ++k) {
      const auto v = rd.pair(k, *lambda);
      minuscule = v == 0 || v == 1;
    }
    if (!minuscule) continue;
    for (int w = 0; w < w_->order(); ++w) {
      AffineWeylElement u{*lambda, w};
      if (length(u) == 0) out.push_back(u);
    }
  }
  return out;
}

Rational AffineWeylGroup::pair_moved_barycenter(const AffineWeylElement& u, int k) const {
  const auto& rd = root_datum();
  // <alpha, lambda + w x> = <alpha, lambda> + <w^{-1} alpha, x>
  const int back = w_->act_root(w_->inverse(u.finite), k);
  return Rational(rd.pair(k, u.translation)) + rd.barycenter_pairing(back);
}

std::int64_t d_lambda(const RootDatum& rd, const LatticeVector& lambda) {
  std::int64_t d = 0;
  for (int k = 0; k < rd.num_positive(); ++k) d += std::llabs(rd.pair(k, lambda));
  return d;
}

std::int64_t conv_fiber_dim(const RootDatum& rd, const LatticeVector& lambda, const LatticeVector& mu) {
  const std::int64_t twice = d_lambda(rd, lambda) + d_lambda(rd, mu) - d_lambda(rd, lambda + mu);
  if (twice < 0 || twice % 2 != 0) throw std::logic_error("convolution fiber dimension parity failure");
  return twice / 2;
}

std::int64_t per_root_z_dim(const RootDatum& rd, const LatticeVector& lambda, const LatticeVector& mu, int k) {
  if (k < 0 || k >= rd.num_positive()) throw std::out_of_range("per_root_z_dim needs a positive root");
  if (!rd.is_dominant(lambda)) throw std::invalid_argument("per_root_z_dim requires dominant lambda");
  const std::int64_t twice = rd.pair(k, lambda) + std::llabs(rd.pair(k, mu)) - std::llabs(rd.pair(k, lambda + mu));
  if (twice < 0 || twice % 2 != 0) throw std::logic_error("per-root fiber dimension parity failure");
  return twice / 2;
}

ConvolutionResult standard_convolution(const RootDatum& rd, const LatticeVector& lambda, const LatticeVector& mu) {
  return {lambda + mu, conv_fiber_dim(rd, lambda, mu)};
}

std::int64_t default_level_bound(const RootDatum& rd, const LatticeVector& lambda, const LatticeVector& mu) {
  std::int64_t m = 0;
  for (int k = 0; k < rd.num_positive(); ++k)
    m = std::max<std::int64_t>({m, std::llabs(rd.pair(k, lambda + mu)), std::llabs(rd.pair(k, mu))});
  return m + 2;
}

SeparationResult check_no_separating_affine_root(const RootDatum& rd, const LatticeVector& lambda,
                                                 const LatticeVector& mu, std::optional<std::int64_t> level_bound) {
  SeparationResult res;
  res.level_bound = level_bound.value_or(default_level_bound(rd, lambda, mu));
  for (int k = 0; k < rd.num_roots(); ++k) {
    const Rational at_x = rd.barycenter_pairing(k);
    const Rational at_x_mu = at_x + Rational(rd.pair(k, mu));
    const std::int64_t at_sum = rd.pair(k, lambda + mu);
    for (std::int64_t n = -res.level_bound; n <= res.level_bound; ++n) {
      if (at_x + Rational(n) > Rational(0) && at_x_mu + Rational(n) < Rational(0) && at_sum + n >= 0) {
        res.holds = false;
        res.witness = AffineRoot{k, n};
        return res;
      }
    }
  }
  return res;
}

std::vector<LatticeVector> lattice_window(const RootDatum& rd, int radius) {
  if (radius < 0) throw std::invalid_argument("negative window radius");
  const int r = rd.rank();
  std::vector<LatticeVector> out;
  LatticeVector v(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) v[i] = -radius;
  while (true) {
    out.push_back(v);
    int i = r - 1;
    while (i >= 0 && v[i] == radius) v[i--] = -radius;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

std::vector<LatticeVector> gr_fixed_points(const RootDatum& rd, int radius) { return lattice_window(rd, radius); }

std::vector<LatticeVector> gr_fixed_points_by_dimension(const RootDatum& rd, std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("negative dimension bound");
  const int r = rd.rank();
  std::vector<LatticeVector> out;
  // Simple roots are positive, so every simple pairing is bounded by d_lambda.
  std::vector<std::int64_t> p(r, -bound);
  while (true) {
    if (auto lambda = rd.from_pairings(p); lambda && d_lambda(rd, *lambda) <= bound) out.push_back(*lambda);
    int i = r - 1;
    while (i >= 0 && p[i] == bound) p[i--] = -bound;
    if (i < 0) break;
    ++p[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kshadow
