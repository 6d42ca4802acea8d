#include "kshadow/rootdata.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kshadow {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

// Fraction-free Gaussian elimination.
std::int64_t int_det(Matrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = static_cast<std::int64_t>(
            (static_cast<__int128>(a[i][j]) * a[k][k] - static_cast<__int128>(a[i][k]) * a[k][j]) / prev);
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Matrix adjugate(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix adj(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      const std::int64_t cof = ((i + j) % 2 ? -1 : 1) * int_det(minor);
      adj[j][i] = cof;
    }
  return adj;
}

// Simple roots in a Euclidean model (Bourbaki numbering), scaled to integers.
std::vector<std::vector<int>> euclidean_simple_roots(char family, int n) {
  std::vector<std::vector<int>> s;
  auto e = [](int dim, int i) {
    std::vector<int> v(dim, 0);
    v[i] = 1;
    return v;
  };
  auto diff = [](std::vector<int> a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  switch (family) {
    case 'A':
      for (int i = 0; i < n; ++i) s.push_back(diff(e(n + 1, i), e(n + 1, i + 1)));
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(e(n, i), e(n, i + 1)));
      s.push_back(e(n, n - 1));
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(e(n, i), e(n, i + 1)));
      {
        auto v = e(n, n - 1);
        v[n - 1] = 2;
        s.push_back(v);
      }
      break;
    case 'D':
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(e(n, i), e(n, i + 1)));
      {
        auto v = e(n, n - 2);
        v[n - 1] = 1;
        s.push_back(v);
      }
      break;
    case 'E': {
      // Doubled coordinates in R^8.
      s.push_back({1, -1, -1, -1, -1, -1, -1, 1});
      s.push_back({2, 2, 0, 0, 0, 0, 0, 0});
      for (int i = 0; i < 6; ++i) {
        std::vector<int> v(8, 0);
        v[i] = -2;
        v[i + 1] = 2;
        s.push_back(v);
      }
      s.resize(n);
      break;
    }
    case 'F':
      s = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      break;
    case 'G':
      s = {{1, -1, 0}, {-2, 1, 1}};
      break;
    default:
      throw std::invalid_argument("unknown Cartan type");
  }
  return s;
}

int euclid(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::string to_string(LatticeMode m) {
  return m == LatticeMode::kSimplyConnected ? "sc" : "adjoint";
}

LatticeMode parse_lattice_mode(const std::string& s) {
  if (s == "sc" || s == "simply-connected") return LatticeMode::kSimplyConnected;
  if (s == "adjoint" || s == "ad") return LatticeMode::kAdjoint;
  throw std::invalid_argument("unknown lattice mode '" + s + "' (expected sc or adjoint)");
}

bool RootDatum::valid_type(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1 && rank < static_cast<int>(kMaxRank);
    case 'B': return rank >= 2 && rank <= static_cast<int>(kMaxRank);
    case 'C': return rank >= 2 && rank <= static_cast<int>(kMaxRank);
    case 'D': return rank >= 4 && rank <= static_cast<int>(kMaxRank);
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

int RootDatum::expected_positive_count(char family, int n) {
  switch (family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
    default: return -1;
  }
}

RootDatum::RootDatum(char family, int rank, LatticeMode mode)
    : family_(family), rank_(rank), mode_(mode) {
  if (!valid_type(family, rank))
    throw std::invalid_argument("invalid Cartan type " + std::string(1, family) + std::to_string(rank));
  const auto simple = euclidean_simple_roots(family, rank);
  gram_.assign(rank, std::vector<int>(rank, 0));
  cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) gram_[i][j] = euclid(simple[i], simple[j]);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cartan_[i][j] = 2 * gram_[i][j] / gram_[j][j];
  build_positive_roots();
  if (num_positive() != expected_positive_count(family, rank))
    throw std::logic_error("positive root closure produced a wrong count for " + label());
  build_lattice_data();
}

std::string RootDatum::label() const { return std::string(1, family_) + std::to_string(rank_); }
std::string RootDatum::fingerprint() const { return label() + "-" + to_string(mode_); }

std::int64_t RootDatum::root_coroot_pairing(const RootVector& beta, int i) const {
  std::int64_t s = 0;
  for (int j = 0; j < rank_; ++j) s += std::int64_t{beta[j]} * cartan_[j][i];
  return s;
}

void RootDatum::build_positive_roots() {
  std::map<RootVector, int> found;
  std::vector<std::vector<RootVector>> by_height(1);
  for (int i = 0; i < rank_; ++i) {
    const auto a = RootVector::unit(rank_, i);
    by_height[0].push_back(a);
    found[a] = 1;
  }
  for (std::size_t h = 0; h < by_height.size(); ++h) {
    std::vector<RootVector> next;
    for (const auto& beta : by_height[h]) {
      for (int i = 0; i < rank_; ++i) {
        // alpha_i-string through beta: p - q = <beta, alpha_i^vee>.
        int p = 0;
        RootVector down = beta;
        while (true) {
          down -= RootVector::unit(rank_, i);
          if (!found.contains(down)) break;
          ++p;
        }
        const std::int64_t q = p - root_coroot_pairing(beta, i);
        if (q > 0) {
          const auto up = beta + RootVector::unit(rank_, i);
          if (!found.contains(up)) {
            found[up] = 1;
            next.push_back(up);
          }
        }
      }
    }
    if (!next.empty()) by_height.push_back(std::move(next));
  }
  for (auto& level : by_height) {
    std::sort(level.begin(), level.end(), std::greater<>());
    for (auto& r : level) positive_.push_back(r);
  }
  for (int k = 0; k < num_positive(); ++k) {
    index_[positive_[k]] = k;
    index_[-positive_[k]] = k + num_positive();
  }
  simple_idx_.resize(rank_);
  for (int i = 0; i < rank_; ++i) simple_idx_[i] = root_index(RootVector::unit(rank_, i));
  highest_ = num_positive() - 1;
}

void RootDatum::build_lattice_data() {
  const int r = rank_;
  basis_pairing_.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      basis_pairing_[i][j] = mode_ == LatticeMode::kSimplyConnected ? cartan_[i][j] : (i == j ? 1 : 0);

  Matrix p(r, std::vector<std::int64_t>(r));
  Matrix c(r, std::vector<std::int64_t>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      p[i][j] = basis_pairing_[i][j];
      c[i][j] = cartan_[i][j];
    }
  basis_det_ = int_det(p);
  basis_adj_ = adjugate(p);
  cartan_det_ = int_det(c);
  cartan_adj_ = adjugate(c);

  for (const auto& beta : positive_) {
    std::vector<int> row(r, 0);
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) row[j] += beta[i] * basis_pairing_[i][j];
    pairing_rows_.push_back(row);

    // beta^vee = sum_i b_i (alpha_i, alpha_i) / (beta, beta) alpha_i^vee
    std::int64_t norm = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) norm += std::int64_t{beta[i]} * beta[j] * gram_[i][j];
    std::vector<std::int64_t> cs(r);
    for (int i = 0; i < r; ++i) {
      const std::int64_t num = std::int64_t{beta[i]} * gram_[i][i];
      if (num % norm != 0) throw std::logic_error("non-integral coroot");
      cs[i] = num / norm;
    }
    // pairings <alpha_i, beta^vee> then back to the lattice basis
    std::vector<std::int64_t> pr(r, 0);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) pr[i] += cartan_[i][k] * cs[k];
    auto cv = from_pairings(pr);
    if (!cv) throw std::logic_error("coroot outside the lattice");
    coroots_.push_back(*cv);
  }

  // Barycenter of the fundamental alcove: <alpha_i, x> = 1 / ((r+1) c_i).
  const RootVector& theta = positive_[highest_];
  std::int64_t l = 1;
  for (int i = 0; i < r; ++i) l = std::lcm(l, std::int64_t{theta[i]});
  bary_den_ = (r + 1) * l;
  bary_num_.resize(r);
  for (int i = 0; i < r; ++i) bary_num_[i] = l / theta[i];
}

RootVector RootDatum::root(int k) const {
  if (k < 0 || k >= num_roots()) throw std::out_of_range("root index");
  return k < num_positive() ? positive_[k] : -positive_[k - num_positive()];
}

int RootDatum::root_index(const RootVector& r) const {
  const auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

int RootDatum::height(int k) const {
  const RootVector r = root(k);
  int h = 0;
  for (int i = 0; i < rank_; ++i) h += r[i];
  return h;
}

LatticeVector RootDatum::coroot(int k) const {
  if (k < 0 || k >= num_roots()) throw std::out_of_range("root index");
  return k < num_positive() ? coroots_[k] : -coroots_[k - num_positive()];
}

std::int64_t RootDatum::pair(int k, const LatticeVector& lambda) const {
  if (static_cast<int>(lambda.size()) != rank_) throw std::invalid_argument("dimension mismatch");
  if (k < 0 || k >= num_roots()) throw std::out_of_range("root index");
  const bool neg = k >= num_positive();
  const std::int64_t v = dot(pairing_rows_[neg ? k - num_positive() : k], lambda);
  return neg ? -v : v;
}

std::int64_t RootDatum::pair(const RootVector& alpha, const LatticeVector& lambda) const {
  if (static_cast<int>(alpha.size()) != rank_ || static_cast<int>(lambda.size()) != rank_)
    throw std::invalid_argument("dimension mismatch");
  const auto p = simple_pairings(lambda);
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) s += alpha[i] * p[i];
  return s;
}

std::vector<std::int64_t> RootDatum::simple_pairings(const LatticeVector& lambda) const {
  if (static_cast<int>(lambda.size()) != rank_) throw std::invalid_argument("dimension mismatch");
  std::vector<std::int64_t> p(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) p[i] += std::int64_t{basis_pairing_[i][j]} * lambda[j];
  return p;
}

std::optional<LatticeVector> RootDatum::from_pairings(std::span<const std::int64_t> p) const {
  if (static_cast<int>(p.size()) != rank_) throw std::invalid_argument("dimension mismatch");
  LatticeVector out(static_cast<std::size_t>(rank_));
  for (int j = 0; j < rank_; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) s += basis_adj_[j][i] * p[i];
    if (s % basis_det_ != 0) return std::nullopt;
    out[j] = static_cast<int>(s / basis_det_);
  }
  return out;
}

std::optional<std::vector<std::int64_t>> RootDatum::simple_coroot_coords(const LatticeVector& lambda) const {
  const auto p = simple_pairings(lambda);
  std::vector<std::int64_t> out(rank_);
  for (int j = 0; j < rank_; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) s += cartan_adj_[j][i] * p[i];
    if (s % cartan_det_ != 0) return std::nullopt;
    out[j] = s / cartan_det_;
  }
  return out;
}

RootVector RootDatum::two_rho() const {
  RootVector s(static_cast<std::size_t>(rank_));
  for (const auto& r : positive_) s += r;
  return s;
}

std::int64_t RootDatum::pair_two_rho(const LatticeVector& lambda) const { return pair(two_rho(), lambda); }

bool RootDatum::is_dominant(const LatticeVector& lambda) const {
  for (auto v : simple_pairings(lambda))
    if (v < 0) return false;
  return true;
}

bool RootDatum::is_strictly_dominant(const LatticeVector& lambda) const {
  for (auto v : simple_pairings(lambda))
    if (v < 1) return false;
  return true;
}

LatticeVector RootDatum::reflect(int i, const LatticeVector& lambda) const {
  const auto a = pair(simple_idx_[i], lambda);
  LatticeVector out = lambda;
  const LatticeVector& cv = coroots_[simple_idx_[i]];
  for (int j = 0; j < rank_; ++j) out[j] -= static_cast<int>(a * cv[j]);
  return out;
}

RootVector RootDatum::reflect_root(int i, const RootVector& beta) const {
  RootVector out = beta;
  out[i] -= static_cast<int>(root_coroot_pairing(beta, i));
  return out;
}

std::vector<int> RootDatum::reflection_matrix(int i) const {
  std::vector<int> m(rank_ * rank_, 0);
  for (int col = 0; col < rank_; ++col) {
    const auto img = reflect(i, LatticeVector::unit(rank_, col));
    for (int row = 0; row < rank_; ++row) m[row * rank_ + col] = img[row];
  }
  return m;
}

Rational RootDatum::barycenter_pairing(int k) const {
  const RootVector r = root(k);
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) s += r[i] * bary_num_[i];
  return {s, bary_den_};
}

}  // namespace kshadow
