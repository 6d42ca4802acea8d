#pragma once

#include <optional>
#include <vector>

#include "kshadow/weyl.hpp"

namespace kshadow {

/// t^lambda w in the extended affine Weyl group Lambda x| W.
struct AffineWeylElement {
  LatticeVector translation;
  int finite = 0;  // index into the WeylGroup
  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;
};

/// The affine function alpha + level on the apartment.
struct AffineRoot {
  int root = 0;  // index into the root datum (any sign)
  std::int64_t level = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

/// Group law, length and the length-zero subgroup. Holds a reference to the
/// finite Weyl group, which must outlive it.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(const WeylGroup& w) : w_(&w) {}

  const WeylGroup& finite() const { return *w_; }
  const RootDatum& root_datum() const { return w_->root_datum(); }

  AffineWeylElement identity() const { return {root_datum().zero(), 0}; }
  AffineWeylElement translation(const LatticeVector& lambda) const { return {lambda, 0}; }
  AffineWeylElement finite_element(int w) const { return {root_datum().zero(), w}; }
  /// s_0 = t^{theta^vee} s_theta for i == 0, otherwise the finite s_i (i = 1..rank).
  AffineWeylElement affine_simple(int i) const;

  AffineWeylElement multiply(const AffineWeylElement& a, const AffineWeylElement& b) const;
  AffineWeylElement inverse(const AffineWeylElement& u) const;

  /// Iwahori-Matsumoto length.
  int length(const AffineWeylElement& u) const;
  int sign(const AffineWeylElement& u) const { return length(u) % 2 ? -1 : 1; }
  /// Length-zero elements, found by brute force over minuscule candidates.
  std::vector<AffineWeylElement> omega() const;

  /// <alpha_k, u(x)> for the barycenter x of the fundamental alcove.
  Rational pair_moved_barycenter(const AffineWeylElement& u, int k) const;

 private:
  const WeylGroup* w_;
};

/// dim J t^lambda J / J = sum over positive roots of |<alpha, lambda>|.
std::int64_t d_lambda(const RootDatum& rd, const LatticeVector& lambda);

/// (d_lambda + d_mu - d_{lambda+mu}) / 2.
std::int64_t conv_fiber_dim(const RootDatum& rd, const LatticeVector& lambda, const LatticeVector& mu);

/// dim Z_alpha = (<lambda,alpha> + |<mu,alpha>| - |<lambda+mu,alpha>|) / 2 for a
/// positive root index k. Requires lambda dominant.
std::int64_t per_root_z_dim(const RootDatum& rd, const LatticeVector& lambda, const LatticeVector& mu, int k);

struct ConvolutionResult {
  LatticeVector support;  // lambda + mu
  std::int64_t fiber_dim = 0;
};
ConvolutionResult standard_convolution(const RootDatum& rd, const LatticeVector& lambda, const LatticeVector& mu);

struct SeparationResult {
  bool holds = true;  // no separating affine root found
  std::optional<AffineRoot> witness;
  std::int64_t level_bound = 0;
};

/// Search for an affine root a with a(x) > 0, a(x + mu) < 0 and a(lambda + mu) >= 0,
/// x the barycenter of the fundamental alcove. Levels |n| <= level_bound are
/// scanned; the default bound covers every level at which the first two
/// conditions can hold together.
SeparationResult check_no_separating_affine_root(const RootDatum& rd, const LatticeVector& lambda,
                                                 const LatticeVector& mu,
                                                 std::optional<std::int64_t> level_bound = std::nullopt);
std::int64_t default_level_bound(const RootDatum& rd, const LatticeVector& lambda, const LatticeVector& mu);

/// Lattice points with every coordinate in [-radius, radius], lexicographic.
std::vector<LatticeVector> lattice_window(const RootDatum& rd, int radius);
/// The torus-fixed points t^lambda of the spherical affine Springer fiber with d_lambda <= bound.
std::vector<LatticeVector> gr_fixed_points_by_dimension(const RootDatum& rd, std::int64_t bound);
/// Same, indexed by a coordinate window.
std::vector<LatticeVector> gr_fixed_points(const RootDatum& rd, int radius);

}  // namespace kshadow
