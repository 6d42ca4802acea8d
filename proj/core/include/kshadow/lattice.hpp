#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kshadow {

inline constexpr std::size_t kMaxRank = 8;

struct CoweightTag {};
struct RootTag {};

// Fixed-capacity integer vector. The tag keeps coweight-lattice vectors and
// root-lattice vectors from being mixed up.
template <class Tag>
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t rank) : rank_(check_rank(rank)) {}
  IntVector(std::initializer_list<int> xs) : rank_(check_rank(xs.size())) {
    std::size_t i = 0;
    for (int x : xs) c_[i++] = x;
  }
  explicit IntVector(std::span<const int> xs) : rank_(check_rank(xs.size())) {
    for (std::size_t i = 0; i < xs.size(); ++i) c_[i] = xs[i];
  }

  static IntVector unit(std::size_t rank, std::size_t i) {
    IntVector v(rank);
    v.c_.at(i) = 1;
    return v;
  }

  std::size_t size() const { return rank_; }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  std::span<const int> coords() const { return {c_.data(), rank_}; }
  std::vector<int> to_vector() const { return {c_.begin(), c_.begin() + rank_}; }

  bool is_zero() const {
    for (std::size_t i = 0; i < rank_; ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  IntVector& operator+=(const IntVector& o) {
    same_rank(o);
    for (std::size_t i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  IntVector& operator-=(const IntVector& o) {
    same_rank(o);
    for (std::size_t i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  IntVector& operator*=(int k) {
    for (std::size_t i = 0; i < rank_; ++i) c_[i] *= k;
    return *this;
  }
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(int k, IntVector a) { return a *= k; }
  IntVector operator-() const {
    IntVector r = *this;
    for (std::size_t i = 0; i < rank_; ++i) r.c_[i] = -r.c_[i];
    return r;
  }

  friend bool operator==(const IntVector&, const IntVector&) = default;
  // Lexicographic; translation invariant, which the Laurent division relies on.
  friend std::strong_ordering operator<=>(const IntVector& a, const IntVector& b) {
    if (a.rank_ != b.rank_) return a.rank_ <=> b.rank_;
    for (std::size_t i = 0; i < a.rank_; ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rank_; ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s;
  }

 private:
  static std::size_t check_rank(std::size_t r) {
    if (r > kMaxRank) throw std::invalid_argument("rank exceeds kMaxRank");
    return r;
  }
  void same_rank(const IntVector& o) const {
    if (o.rank_ != rank_) throw std::invalid_argument("dimension mismatch");
  }

  std::array<int, kMaxRank> c_{};
  std::size_t rank_ = 0;
};

/// Element of the coweight lattice X_*(T), in the lattice basis chosen by the
/// root datum (simple coroots or fundamental coweights).
using LatticeVector = IntVector<CoweightTag>;
/// Element of the root lattice in simple-root coordinates.
using RootVector = IntVector<RootTag>;

template <class Tag>
std::int64_t dot(std::span<const int> row, const IntVector<Tag>& v) {
  if (row.size() != v.size()) throw std::invalid_argument("dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < row.size(); ++i) s += std::int64_t{row[i]} * v[i];
  return s;
}

/// Exact rational with int64 parts, always normalized (den > 0).
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("zero denominator");
    normalize();
  }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  Rational operator-() const { return {-num_, den_}; }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }
  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace kshadow
