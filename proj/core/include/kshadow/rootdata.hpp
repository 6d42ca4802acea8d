#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kshadow/lattice.hpp"

namespace kshadow {

/// Which lattice plays the role of X_*(T).
enum class LatticeMode {
  kSimplyConnected,  // coroot lattice, coordinates on simple coroots
  kAdjoint,          // coweight lattice, coordinates on fundamental coweights
};

std::string to_string(LatticeMode m);
LatticeMode parse_lattice_mode(const std::string& s);

/// A reduced irreducible finite root datum together with the chosen form of G.
///
/// Roots are stored in simple-root coordinates. Index k < num_positive() is a
/// positive root; index num_positive() + k is its negative. Positive roots are
/// ordered by height, then lexicographically (descending), so every table
/// derived from a RootDatum is reproducible.
class RootDatum {
 public:
  RootDatum(char family, int rank, LatticeMode mode = LatticeMode::kSimplyConnected);

  char family() const { return family_; }
  int rank() const { return rank_; }
  LatticeMode lattice_mode() const { return mode_; }
  std::string label() const;  // e.g. "A2"
  std::string fingerprint() const;  // label plus lattice mode

  /// <alpha_i, alpha_j^vee>.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  int num_positive() const { return static_cast<int>(positive_.size()); }
  int num_roots() const { return 2 * num_positive(); }
  /// Root by index over all of Phi (positives first, then their negatives).
  RootVector root(int k) const;
  const std::vector<RootVector>& positive_roots() const { return positive_; }
  int root_index(const RootVector& r) const;  // -1 if not a root
  bool is_positive_index(int k) const { return k < num_positive(); }
  int negate_index(int k) const { return k < num_positive() ? k + num_positive() : k - num_positive(); }
  int height(int k) const;
  int simple_index(int i) const { return simple_idx_[i]; }

  /// Coroot of root k as a lattice vector.
  LatticeVector coroot(int k) const;
  LatticeVector simple_coroot(int i) const { return coroot(simple_idx_[i]); }

  /// <alpha_k, lambda>.
  std::int64_t pair(int k, const LatticeVector& lambda) const;
  /// <alpha, lambda> for an arbitrary root-lattice vector.
  std::int64_t pair(const RootVector& alpha, const LatticeVector& lambda) const;
  /// (<alpha_1, lambda>, ..., <alpha_r, lambda>).
  std::vector<std::int64_t> simple_pairings(const LatticeVector& lambda) const;
  /// Inverse of simple_pairings; nullopt when the vector is not in the lattice.
  std::optional<LatticeVector> from_pairings(std::span<const std::int64_t> p) const;
  /// Coordinates of lambda on the simple coroots, nullopt if not in the coroot lattice.
  std::optional<std::vector<std::int64_t>> simple_coroot_coords(const LatticeVector& lambda) const;

  /// sum of positive roots, in simple-root coordinates.
  RootVector two_rho() const;
  /// <2 rho, lambda>.
  std::int64_t pair_two_rho(const LatticeVector& lambda) const;
  bool is_dominant(const LatticeVector& lambda) const;
  bool is_strictly_dominant(const LatticeVector& lambda) const;

  /// Simple reflection s_i on the lattice (lambda - <alpha_i, lambda> alpha_i^vee).
  LatticeVector reflect(int i, const LatticeVector& lambda) const;
  /// Simple reflection on the root lattice.
  RootVector reflect_root(int i, const RootVector& beta) const;
  /// <beta, alpha_i^vee> for beta in simple-root coordinates.
  std::int64_t root_coroot_pairing(const RootVector& beta, int i) const;
  /// Integer matrix of s_i on the lattice basis, row-major.
  std::vector<int> reflection_matrix(int i) const;

  /// Index of the highest root and its simple-root coefficients.
  int highest_root_index() const { return highest_; }
  /// Exact value <alpha_k, x> at the barycenter x of the fundamental alcove.
  Rational barycenter_pairing(int k) const;

  /// Known count of positive roots for the type (independent table).
  static int expected_positive_count(char family, int rank);
  static bool valid_type(char family, int rank);

  LatticeVector zero() const { return LatticeVector(static_cast<std::size_t>(rank_)); }

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_ && a.mode_ == b.mode_;
  }

 private:
  void build_positive_roots();
  void build_lattice_data();

  char family_;
  int rank_;
  LatticeMode mode_;
  std::vector<std::vector<int>> gram_;    // Euclidean inner products (alpha_i, alpha_j)
  std::vector<std::vector<int>> cartan_;  // <alpha_i, alpha_j^vee>
  std::vector<RootVector> positive_;
  std::vector<int> simple_idx_;
  std::map<RootVector, int> index_;  // over all roots
  std::vector<std::vector<int>> pairing_rows_;  // per positive root, row on lattice basis
  std::vector<LatticeVector> coroots_;          // per positive root
  std::vector<std::vector<int>> basis_pairing_;  // P[i][j] = <alpha_i, b_j>
  std::vector<std::vector<std::int64_t>> basis_adj_;  // adjugate of P
  std::int64_t basis_det_ = 1;
  std::vector<std::vector<std::int64_t>> cartan_adj_;
  std::int64_t cartan_det_ = 1;
  int highest_ = 0;
  std::int64_t bary_den_ = 1;
  std::vector<std::int64_t> bary_num_;  // <alpha_i, x> * bary_den_ for simple i
};

}  // namespace kshadow
