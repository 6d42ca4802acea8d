#include "kshadow/characters.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

namespace kshadow {

namespace {

void require_dominant(const RootDatum& rd, const LatticeVector& mu) {
  if (!rd.is_dominant(mu)) throw std::invalid_argument("highest weight must be dominant");
}

// w rho^vee - rho^vee = -(sum of positive coroots beta^vee with w^{-1} beta < 0).
LatticeVector rho_shift(const WeylGroup& w, int v) {
  const auto& rd = w.root_datum();
  const int vinv = w.inverse(v);
  LatticeVector s = rd.zero();
  for (int k = 0; k < rd.num_positive(); ++k)
    if (!rd.is_positive_index(w.act_root(vinv, k))) s -= rd.coroot(k);
  return s;
}

LatticeVector dot_action(const WeylGroup& w, int v, const LatticeVector& mu) {
  return w.act(v, mu) + rho_shift(w, v);
}

// B(x, y) = sum_{alpha > 0} <alpha, x><alpha, y>; note <alpha, rho^vee> = ht(alpha).
std::int64_t form(const RootDatum& rd, const LatticeVector& x, const LatticeVector& y) {
  std::int64_t s = 0;
  for (int k = 0; k < rd.num_positive(); ++k) s += rd.pair(k, x) * rd.pair(k, y);
  return s;
}

std::int64_t form_rho(const RootDatum& rd, const LatticeVector& x) {
  std::int64_t s = 0;
  for (int k = 0; k < rd.num_positive(); ++k) s += rd.pair(k, x) * rd.height(k);
  return s;
}

// |x + rho|^2 up to the constant |rho|^2.
std::int64_t shifted_norm(const RootDatum& rd, const LatticeVector& x) { return form(rd, x, x) + 2 * form_rho(rd, x); }

}  // namespace

LatticeVector dominant_representative(const RootDatum& rd, const LatticeVector& lambda) {
  LatticeVector x = lambda;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < rd.rank(); ++i)
      if (rd.pair(rd.simple_index(i), x) < 0) {
        x = rd.reflect(i, x);
        moved = true;
      }
  }
  return x;
}

bool in_weight_polytope(const RootDatum& rd, const LatticeVector& mu, const LatticeVector& lambda) {
  const auto c = rd.simple_coroot_coords(mu - dominant_representative(rd, lambda));
  if (!c) return false;
  for (auto x : *c)
    if (x < 0) return false;
  return true;
}

LaurentPoly weyl_character(const WeylGroup& w, const LatticeVector& mu) {
  const auto& rd = w.root_datum();
  require_dominant(rd, mu);
  const std::size_t r = static_cast<std::size_t>(rd.rank());
  LaurentPoly num(r), den(r);
  for (int v = 0; v < w.order(); ++v) {
    num += LaurentPoly::monomial(dot_action(w, v, mu), w.sign(v));
  }
  den = LaurentPoly::constant(r, 1);
  for (int k = 0; k < rd.num_positive(); ++k) den = den * LaurentPoly::one_minus(-rd.coroot(k));
  return divide_exact(num, den);
}

std::int64_t kostant_partition(const RootDatum& rd, const LatticeVector& nu) {
  const auto target = rd.simple_coroot_coords(nu);
  if (!target) return 0;
  const int r = rd.rank();
  for (auto x : *target)
    if (x < 0) return 0;
  // Box-shaped DP over simple-coroot coordinates; every positive coroot has
  // nonnegative coordinates, so no partial sum ever leaves [0, target].
  std::vector<std::int64_t> stride(r + 1, 1);
  for (int i = 0; i < r; ++i) stride[i + 1] = stride[i] * ((*target)[i] + 1);
  std::vector<std::int64_t> table(stride[r], 0);
  table[0] = 1;
  for (int k = 0; k < rd.num_positive(); ++k) {
    const auto step = *rd.simple_coroot_coords(rd.coroot(k));
    std::int64_t offset = 0;
    for (int i = 0; i < r; ++i) offset += step[i] * stride[i];
    std::vector<std::int64_t> idx(r, 0);
    for (std::int64_t flat = 0; flat < stride[r]; ++flat) {
      bool fits = true;
      for (int i = 0; i < r && fits; ++i) fits = idx[i] >= step[i];
      if (fits) table[flat] += table[flat - offset];
      for (int i = 0; i < r; ++i) {
        if (++idx[i] <= (*target)[i]) break;
        idx[i] = 0;
      }
    }
  }
  return table.back();
}

std::int64_t kostant_multiplicity(const WeylGroup& w, const LatticeVector& mu, const LatticeVector& lambda) {
  require_dominant(w.root_datum(), mu);
  std::int64_t m = 0;
  for (int v = 0; v < w.order(); ++v) m += w.sign(v) * kostant_partition(w.root_datum(), dot_action(w, v, mu) - lambda);
  return m;
}

std::int64_t freudenthal_multiplicity(const WeylGroup& w, const LatticeVector& mu, const LatticeVector& lambda) {
  const auto& rd = w.root_datum();
  require_dominant(rd, mu);
  const std::int64_t top = shifted_norm(rd, mu);
  std::map<LatticeVector, std::int64_t> memo;
  std::function<std::int64_t(const LatticeVector&)> mult = [&](const LatticeVector& x) -> std::int64_t {
    if (!in_weight_polytope(rd, mu, x)) return 0;
    if (x == mu) return 1;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    std::int64_t acc = 0;
    for (int k = 0; k < rd.num_positive(); ++k) {
      const auto beta = rd.coroot(k);
      for (LatticeVector y = x + beta; in_weight_polytope(rd, mu, y); y += beta) acc += mult(y) * form(rd, y, beta);
    }
    const std::int64_t gap = top - shifted_norm(rd, x);
    if (gap <= 0) throw std::logic_error("Freudenthal denominator vanished inside the weight polytope");
    if ((2 * acc) % gap != 0) throw std::logic_error("Freudenthal recursion produced a non-integer");
    return memo[x] = 2 * acc / gap;
  };
  return mult(lambda);
}

std::int64_t weyl_dimension(const RootDatum& rd, const LatticeVector& mu) {
  require_dominant(rd, mu);
  Rational d(1);
  for (int k = 0; k < rd.num_positive(); ++k) d = d * Rational(rd.pair(k, mu) + rd.height(k), rd.height(k));
  if (!d.is_integer()) throw std::logic_error("Weyl dimension formula gave a fraction");
  return d.num();
}

WeightMultiplicities microstalk_dims(const LaurentPoly& character) {
  WeightMultiplicities out;
  for (const auto& t : character.terms()) out[-t.exp] = t.coef;
  return out;
}

WeightMultiplicities microstalk_dims(const WeylGroup& w, const LatticeVector& mu) {
  return microstalk_dims(weyl_character(w, mu));
}

std::int64_t fiber_functor_dim(const WeylGroup& w, const LatticeVector& mu) {
  std::int64_t s = 0;
  for (const auto& [lambda, m] : microstalk_dims(w, mu)) s += m;
  return s;
}

LatticeVector dual_weight(const WeylGroup& w, const LatticeVector& mu) { return -w.act(w.longest(), mu); }

WeightMultiplicities convolve(const WeightMultiplicities& a, const WeightMultiplicities& b) {
  WeightMultiplicities out;
  for (const auto& [x, m] : a)
    for (const auto& [y, n] : b)
      if ((out[x + y] += m * n) == 0) out.erase(x + y);
  return out;
}

LaurentPoly CharacterCache::get(const WeylGroup& w, const LatticeVector& mu) {
  const auto key = std::make_pair(w.root_datum().fingerprint(), mu);
  {
    std::shared_lock lock(mu_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
  }
  auto chi = weyl_character(w, mu);
  std::unique_lock lock(mu_);
  return table_.try_emplace(key, std::move(chi)).first->second;
}

std::size_t CharacterCache::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

std::map<std::pair<std::string, LatticeVector>, LaurentPoly> CharacterCache::snapshot() const {
  std::shared_lock lock(mu_);
  return table_;
}

void CharacterCache::insert(const std::string& fingerprint, const LatticeVector& mu, LaurentPoly chi) {
  std::unique_lock lock(mu_);
  table_.insert_or_assign(std::make_pair(fingerprint, mu), std::move(chi));
}

}  // namespace kshadow
