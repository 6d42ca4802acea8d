#include "kshadow/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kshadow {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t rank, std::int64_t c) {
  LaurentPoly p(rank);
  if (c != 0) p.terms_.push_back({LatticeVector(rank), c});
  return p;
}

LaurentPoly LaurentPoly::monomial(const LatticeVector& e, std::int64_t c) {
  LaurentPoly p(e.size());
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

LaurentPoly LaurentPoly::one_minus(const LatticeVector& beta) {
  return constant(beta.size(), 1) - monomial(beta);
}

LaurentPoly LaurentPoly::from_terms(std::size_t rank, std::vector<Term> terms) {
  LaurentPoly p(rank);
  for (const auto& t : terms)
    if (t.exp.size() != rank) throw std::invalid_argument("dimension mismatch");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef = checked_add(out.back().coef, t.coef);
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms_ = std::move(out);
}

void LaurentPoly::check_rank(const LaurentPoly& o) const {
  if (o.rank_ != rank_) throw std::invalid_argument("dimension mismatch");
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coef == 1 || terms_[0].coef == -1);
}

std::int64_t LaurentPoly::coefficient(const LatticeVector& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const LatticeVector& x) { return t.exp < x; });
  return it != terms_.end() && it->exp == e ? it->coef : 0;
}

std::int64_t LaurentPoly::augmentation() const {
  std::int64_t s = 0;
  for (const auto& t : terms_) s = checked_add(s, t.coef);
  return s;
}

std::pair<LatticeVector, LatticeVector> LaurentPoly::support_box() const {
  if (terms_.empty()) throw std::domain_error("support of zero polynomial");
  LatticeVector lo = terms_.front().exp, hi = lo;
  for (const auto& t : terms_)
    for (std::size_t j = 0; j < rank_; ++j) {
      lo[j] = std::min(lo[j], t.exp[j]);
      hi[j] = std::max(hi[j], t.exp[j]);
    }
  return {lo, hi};
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_rank(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back(*b++);
    } else {
      const auto c = checked_add(a->coef, b->coef);
      if (c != 0) out.push_back({a->exp, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(std::int64_t k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef = checked_mul(t.coef, k);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_rank(b);
  LaurentPoly r(a.rank_);
  if (a.is_zero() || b.is_zero()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) r.terms_.push_back({x.exp + y.exp, checked_mul(x.coef, y.coef)});
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::shifted(const LatticeVector& lambda) const {
  if (lambda.size() != rank_) throw std::invalid_argument("dimension mismatch");
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp += lambda;
  return r;
}

LaurentPoly LaurentPoly::map_exponents(const std::function<LatticeVector(const LatticeVector&)>& f) const {
  LaurentPoly r(rank_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({f(t.exp), t.coef});
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  return map_exponents([](const LatticeVector& e) { return -e; });
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest exponent first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto c = it->coef;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const auto a = c < 0 ? -c : c;
    if (it->exp.is_zero()) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      s += "e(" + it->exp.to_string() + ")";
    }
  }
  return s;
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& d) {
  if (d.rank() != f.rank()) throw std::invalid_argument("dimension mismatch");
  if (d.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  const std::size_t n = f.rank();
  if (f.is_zero()) return LaurentPoly(n);

  // Newton polytopes add under multiplication, so the quotient lives in a box.
  const auto [flo, fhi] = f.support_box();
  const auto [dlo, dhi] = d.support_box();
  const LatticeVector qlo = flo - dlo;
  const LatticeVector qhi = fhi - dhi;
  for (std::size_t j = 0; j < n; ++j)
    if (qlo[j] > qhi[j]) return std::nullopt;

  const auto& lead = d.terms().back();
  std::map<LatticeVector, std::int64_t> rem;
  for (const auto& t : f.terms()) rem.emplace(t.exp, t.coef);
  std::vector<LaurentPoly::Term> q;

  while (!rem.empty()) {
    const auto [m, c] = *rem.rbegin();
    const LatticeVector qm = m - lead.exp;
    for (std::size_t j = 0; j < n; ++j)
      if (qm[j] < qlo[j] || qm[j] > qhi[j]) return std::nullopt;
    if (c % lead.coef != 0) return std::nullopt;
    const std::int64_t qc = c / lead.coef;
    q.push_back({qm, qc});
    for (const auto& t : d.terms()) {
      const LatticeVector e = t.exp + qm;
      std::int64_t prod;
      if (__builtin_mul_overflow(qc, t.coef, &prod)) throw std::overflow_error("Laurent coefficient overflow");
      auto it = rem.find(e);
      if (it == rem.end()) {
        rem.emplace(e, -prod);
      } else {
        it->second -= prod;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return LaurentPoly::from_terms(n, std::move(q));
}

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& d) {
  auto q = exact_divide(f, d);
  if (!q) throw std::domain_error("inexact division: (" + f.to_string() + ") / (" + d.to_string() + ")");
  return *q;
}

}  // namespace kshadow
