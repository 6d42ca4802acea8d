#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kshadow/lattice.hpp"

namespace kshadow {

/// Finitely supported integer function on the lattice, i.e. an element of the
/// group ring Z[Lambda] = R(T^vee). Terms are kept sorted by exponent
/// (lexicographic) with no zero coefficients.
class LaurentPoly {
 public:
  struct Term {
    LatticeVector exp;
    std::int64_t coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t rank) : rank_(rank) {}
  static LaurentPoly constant(std::size_t rank, std::int64_t c);
  static LaurentPoly monomial(const LatticeVector& e, std::int64_t c = 1);
  /// 1 - e^beta
  static LaurentPoly one_minus(const LatticeVector& beta);
  static LaurentPoly from_terms(std::size_t rank, std::vector<Term> terms);

  std::size_t rank() const { return rank_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// +-e^lambda
  bool is_unit() const;
  std::int64_t coefficient(const LatticeVector& e) const;
  /// Image under the augmentation e^lambda -> 1.
  std::int64_t augmentation() const;
  /// Smallest box containing the support, per coordinate.
  std::pair<LatticeVector, LatticeVector> support_box() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(std::int64_t k);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(std::int64_t k, LaurentPoly a) { return a *= k; }
  LaurentPoly operator-() const;

  /// e^lambda * this
  LaurentPoly shifted(const LatticeVector& lambda) const;
  /// Apply an exponent map (e.g. a Weyl group element); the map must be injective.
  LaurentPoly map_exponents(const std::function<LatticeVector(const LatticeVector&)>& f) const;
  /// e^lambda -> e^{-lambda}
  LaurentPoly inverted() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_rank(const LaurentPoly& o) const;
  void normalize();

  std::size_t rank_ = 0;
  std::vector<Term> terms_;
};

/// Exact quotient f / d in Z[Lambda], or nullopt when d does not divide f.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& d);
/// As exact_divide, but a failed division is a std::domain_error.
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& d);

}  // namespace kshadow
