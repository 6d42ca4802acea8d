#include "kshadow/weyl.hpp"

#include <deque>
#include <stdexcept>

namespace kshadow {

namespace {

std::vector<int> mat_mul(const std::vector<int>& a, const std::vector<int>& b, int n) {
  std::vector<int> c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

std::vector<int> identity_matrix(int n) {
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

void check_bound(const RootDatum& rd, int rank_bound) {
  if (rd.rank() > rank_bound)
    throw std::invalid_argument("Weyl group enumeration refused: rank " + std::to_string(rd.rank()) +
                                " exceeds the configured bound " + std::to_string(rank_bound));
}

}  // namespace

WeylGroup::WeylGroup(RootDatum rd, int rank_bound, bool) : rd_(std::move(rd)) { check_bound(rd_, rank_bound); }

WeylGroup::WeylGroup(RootDatum rd, int rank_bound) : rd_(std::move(rd)) {
  check_bound(rd_, rank_bound);
  const int n = rd_.rank();
  const int nr = rd_.num_roots();

  std::vector<std::vector<int>> gen_mat(n);
  std::vector<std::vector<int>> gen_perm(n, std::vector<int>(nr));
  for (int i = 0; i < n; ++i) {
    gen_mat[i] = rd_.reflection_matrix(i);
    for (int k = 0; k < nr; ++k) gen_perm[i][k] = rd_.root_index(rd_.reflect_root(i, rd_.root(k)));
  }

  WeylElement e;
  e.matrix = identity_matrix(n);
  e.root_perm.resize(nr);
  for (int k = 0; k < nr; ++k) e.root_perm[k] = k;
  elems_.push_back(e);
  by_matrix_[e.matrix] = 0;

  for (std::size_t head = 0; head < elems_.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      auto m = mat_mul(elems_[head].matrix, gen_mat[i], n);
      if (by_matrix_.contains(m)) continue;
      WeylElement y;
      y.word = elems_[head].word;
      y.word.push_back(i);
      y.matrix = std::move(m);
      y.root_perm.resize(nr);
      for (int k = 0; k < nr; ++k) y.root_perm[k] = elems_[head].root_perm[gen_perm[i][k]];
      by_matrix_[y.matrix] = static_cast<int>(elems_.size());
      elems_.push_back(std::move(y));
    }
  }
  finish();
}

WeylGroup WeylGroup::from_words(RootDatum rd, const std::vector<std::vector<int>>& words, int rank_bound) {
  WeylGroup g(std::move(rd), rank_bound, true);
  const int n = g.rd_.rank();
  const int nr = g.rd_.num_roots();
  if (words.empty() || !words.front().empty()) throw std::invalid_argument("cached words must start with the identity");
  for (const auto& word : words) {
    WeylElement y;
    y.word = word;
    y.matrix = identity_matrix(n);
    y.root_perm.resize(nr);
    for (int k = 0; k < nr; ++k) y.root_perm[k] = k;
    for (int i : word) {
      if (i < 0 || i >= n) throw std::invalid_argument("bad generator in cached word");
      y.matrix = mat_mul(y.matrix, g.rd_.reflection_matrix(i), n);
      const auto prev = y.root_perm;
      for (int k = 0; k < nr; ++k) y.root_perm[k] = prev[g.rd_.root_index(g.rd_.reflect_root(i, g.rd_.root(k)))];
    }
    if (g.by_matrix_.contains(y.matrix)) throw std::invalid_argument("duplicate element in cached words");
    g.by_matrix_[y.matrix] = static_cast<int>(g.elems_.size());
    g.elems_.push_back(std::move(y));
  }
  g.finish();
  return g;
}

void WeylGroup::finish() {
  const int n = rd_.rank();
  const int np = rd_.num_positive();
  const int size = order();
  right_.assign(size, std::vector<int>(n, -1));
  left_.assign(size, std::vector<int>(n, -1));
  inverse_.assign(size, -1);
  std::vector<std::vector<int>> gen_mat(n);
  for (int i = 0; i < n; ++i) gen_mat[i] = rd_.reflection_matrix(i);
  for (int w = 0; w < size; ++w) {
    auto& el = elems_[w];
    el.length = 0;
    for (int k = 0; k < np; ++k)
      if (!rd_.is_positive_index(el.root_perm[k])) ++el.length;
    if (el.length != static_cast<int>(el.word.size()))
      throw std::logic_error("Weyl word is not reduced");
    for (int i = 0; i < n; ++i) {
      right_[w][i] = index_of_matrix(mat_mul(el.matrix, gen_mat[i], n));
      left_[w][i] = index_of_matrix(mat_mul(gen_mat[i], el.matrix, n));
    }
  }
  for (int w = 0; w < size; ++w) {
    std::vector<int> rev(elems_[w].word.rbegin(), elems_[w].word.rend());
    inverse_[w] = from_word(rev);
  }
  longest_ = 0;
  for (int w = 0; w < size; ++w)
    if (elems_[w].length > elems_[longest_].length) longest_ = w;
  if (elems_[longest_].length != rd_.num_positive()) throw std::logic_error("longest element has wrong length");
  bruhat_memo_.assign(static_cast<std::size_t>(size) * size, -1);
}

int WeylGroup::index_of_matrix(const std::vector<int>& m) const {
  const auto it = by_matrix_.find(m);
  if (it == by_matrix_.end()) throw std::logic_error("matrix is not a Weyl group element");
  return it->second;
}

int WeylGroup::from_word(std::span<const int> word) const {
  int w = 0;
  for (int i : word) w = right_mult(w, i);
  return w;
}

int WeylGroup::multiply(int a, int b) const {
  int w = a;
  for (int i : elems_[b].word) w = right_mult(w, i);
  return w;
}

LatticeVector WeylGroup::act(int w, const LatticeVector& lambda) const {
  const int n = rank();
  if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("dimension mismatch");
  const auto& m = elems_[w].matrix;
  LatticeVector out(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    int s = 0;
    for (int c = 0; c < n; ++c) s += m[r * n + c] * lambda[c];
    out[r] = s;
  }
  return out;
}

bool WeylGroup::has_right_descent(int w, int i) const {
  return !rd_.is_positive_index(elems_[w].root_perm[rd_.simple_index(i)]);
}

bool WeylGroup::bruhat_leq(int u, int w) const {
  auto& memo = bruhat_memo_[static_cast<std::size_t>(u) * order() + w];
  if (memo >= 0) return memo;
  bool result;
  if (length(u) > length(w)) {
    result = false;
  } else if (w == 0) {
    result = u == 0;
  } else {
    const int i = elems_[w].word.back();
    const int ws = right_mult(w, i);
    const int us = right_mult(u, i);
    result = bruhat_leq(length(us) < length(u) ? us : u, ws);
  }
  memo = result ? 1 : 0;
  return result;
}

int WeylGroup::coxeter_order(int i, int j) const {
  const int st = multiply(simple(i), simple(j));
  int w = st;
  int m = 1;
  while (w != 0) {
    w = multiply(w, st);
    ++m;
  }
  return m;
}

std::vector<int> WeylGroup::parabolic(std::span<const int> gens) const {
  std::vector<int> out{0};
  std::vector<char> seen(order(), 0);
  seen[0] = 1;
  for (std::size_t h = 0; h < out.size(); ++h)
    for (int i : gens) {
      const int y = right_mult(out[h], i);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  return out;
}

}  // namespace kshadow
