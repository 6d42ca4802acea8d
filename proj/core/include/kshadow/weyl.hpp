#pragma once

#include <map>
#include <span>
#include <vector>

#include "kshadow/rootdata.hpp"

namespace kshadow {

struct WeylElement {
  std::vector<int> word;       // reduced expression in simple reflections
  std::vector<int> matrix;     // action on the lattice basis, row-major
  std::vector<int> root_perm;  // root index k -> index of w(alpha_k)
  int length = 0;
};

/// The finite Weyl group, enumerated by breadth-first closure over the simple
/// reflections. Element 0 is the identity; elements are ordered by length.
class WeylGroup {
 public:
  static constexpr int kDefaultRankBound = 4;

  explicit WeylGroup(RootDatum rd, int rank_bound = kDefaultRankBound);
  /// Rebuild from a list of reduced words (e.g. loaded from the cache). Throws
  /// if the words do not describe the whole group in BFS order.
  static WeylGroup from_words(RootDatum rd, const std::vector<std::vector<int>>& words,
                              int rank_bound = kDefaultRankBound);

  const RootDatum& root_datum() const { return rd_; }
  int rank() const { return rd_.rank(); }
  int order() const { return static_cast<int>(elems_.size()); }
  const WeylElement& operator[](int w) const { return elems_.at(w); }
  const std::vector<WeylElement>& elements() const { return elems_; }

  static constexpr int identity() { return 0; }
  int simple(int i) const { return right_[0][i]; }
  int longest() const { return longest_; }
  int length(int w) const { return elems_[w].length; }
  int sign(int w) const { return elems_[w].length % 2 ? -1 : 1; }

  int right_mult(int w, int i) const { return right_[w][i]; }  // w s_i
  int left_mult(int i, int w) const { return left_[w][i]; }    // s_i w
  int multiply(int a, int b) const;
  int inverse(int w) const { return inverse_[w]; }
  int from_word(std::span<const int> word) const;
  int index_of_matrix(const std::vector<int>& m) const;

  LatticeVector act(int w, const LatticeVector& lambda) const;
  int act_root(int w, int k) const { return elems_[w].root_perm[k]; }
  /// True iff s_i is a right descent of w, i.e. w(alpha_i) < 0.
  bool has_right_descent(int w, int i) const;
  /// Bruhat order via the lifting property.
  bool bruhat_leq(int u, int w) const;
  /// Order of s_i s_j.
  int coxeter_order(int i, int j) const;
  /// Elements of the standard parabolic subgroup generated by the given simple reflections.
  std::vector<int> parabolic(std::span<const int> gens) const;

 private:
  WeylGroup(RootDatum rd, int rank_bound, bool);
  void finish();

  RootDatum rd_;
  std::vector<WeylElement> elems_;
  std::map<std::vector<int>, int> by_matrix_;
  std::vector<std::vector<int>> right_;
  std::vector<std::vector<int>> left_;
  std::vector<int> inverse_;
  int longest_ = 0;
  mutable std::vector<signed char> bruhat_memo_;
};

}  // namespace kshadow
