#pragma once

#include <map>
#include <shared_mutex>
#include <string>
#include <utility>

#include "kshadow/laurent.hpp"
#include "kshadow/weyl.hpp"

namespace kshadow {

using WeightMultiplicities = std::map<LatticeVector, std::int64_t>;

/// Dominant representative of the W-orbit of lambda.
LatticeVector dominant_representative(const RootDatum& rd, const LatticeVector& lambda);
/// True iff lambda is a weight of V_mu: its dominant representative lies in mu - N{simple coroots}.
bool in_weight_polytope(const RootDatum& rd, const LatticeVector& mu, const LatticeVector& lambda);

/// Character of the irreducible G^vee-module V_mu as an element of Z[Lambda],
/// by the alternating-sum quotient. Throws on non-dominant mu.
LaurentPoly weyl_character(const WeylGroup& w, const LatticeVector& mu);
/// Alternating sum over W of Kostant partition counts.
std::int64_t kostant_multiplicity(const WeylGroup& w, const LatticeVector& mu, const LatticeVector& lambda);
/// Freudenthal recursion with the invariant form sum_{alpha > 0} <alpha,x><alpha,y>.
std::int64_t freudenthal_multiplicity(const WeylGroup& w, const LatticeVector& mu, const LatticeVector& lambda);
/// Weyl dimension formula.
std::int64_t weyl_dimension(const RootDatum& rd, const LatticeVector& mu);

/// Number of ways to write nu as a sum of positive coroots.
std::int64_t kostant_partition(const RootDatum& rd, const LatticeVector& nu);

/// lambda -> mult_{V_mu}(-lambda): restriction to T^vee followed by inversion.
WeightMultiplicities microstalk_dims(const LaurentPoly& character);
WeightMultiplicities microstalk_dims(const WeylGroup& w, const LatticeVector& mu);
std::int64_t fiber_functor_dim(const WeylGroup& w, const LatticeVector& mu);

/// -w_0 mu.
LatticeVector dual_weight(const WeylGroup& w, const LatticeVector& mu);

/// Convolution of two finitely supported measures on Lambda.
WeightMultiplicities convolve(const WeightMultiplicities& a, const WeightMultiplicities& b);

/// Read-mostly cache of characters keyed by (root datum, mu).
class CharacterCache {
 public:
  LaurentPoly get(const WeylGroup& w, const LatticeVector& mu);
  std::size_t size() const;
  std::map<std::pair<std::string, LatticeVector>, LaurentPoly> snapshot() const;
  void insert(const std::string& fingerprint, const LatticeVector& mu, LaurentPoly chi);

 private:
  mutable std::shared_mutex mu_;
  std::map<std::pair<std::string, LatticeVector>, LaurentPoly> table_;
};

}  // namespace kshadow
