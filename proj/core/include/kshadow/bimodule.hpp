#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kshadow/affine_weyl.hpp"
#include "kshadow/laurent.hpp"
#include "kshadow/linalg.hpp"

namespace kshadow {

/// A class in K_{T^vee}(B^vee), stored as its restrictions to the fixed points w B^vee.
struct GkmClass {
  std::vector<LaurentPoly> coords;  // indexed by Weyl element
  friend bool operator==(const GkmClass&, const GkmClass&) = default;
};

/// Which sign character twists the right action.
enum class SignTwist { kAffine, kFinite, kNone };
std::string to_string(SignTwist t);

struct SignConvention {
  std::vector<int> epsilon;  // one entry per simple reflection, each +1 or -1
  SignTwist twist = SignTwist::kNone;
};

/// The fixed-point model with its left Lambda x| W action and right W~ action.
/// Holds a reference to the Weyl group, which must outlive it.
class GkmModel {
 public:
  explicit GkmModel(const WeylGroup& w);

  const WeylGroup& weyl() const { return *w_; }
  const RootDatum& root_datum() const { return w_->root_datum(); }
  int size() const { return w_->order(); }

  GkmClass zero() const;
  GkmClass unit() const;
  /// Class supported at e with value prod_{beta > 0} (1 - e^{beta^vee}).
  GkmClass point_class() const;
  /// Edge divisibility: f[w] - f[s_beta w] divisible by 1 - e^{beta^vee}.
  bool is_valid(const GkmClass& f) const;

  GkmClass add(const GkmClass& a, const GkmClass& b) const;
  GkmClass scale(const LaurentPoly& c, const GkmClass& f) const;
  GkmClass negate(const GkmClass& f) const;

  GkmClass left_lattice(const LatticeVector& lambda, const GkmClass& f) const;
  GkmClass left_weyl(int v, const GkmClass& f) const;
  GkmClass right_lattice(const LatticeVector& lambda, const GkmClass& f) const;
  /// f -> f[w s]; the untwisted right action of a simple reflection.
  GkmClass right_swap(int i, const GkmClass& f) const;
  /// f -> f[w v^{-1}]; untwisted right action of v in W.
  GkmClass right_weyl(int v, const GkmClass& f) const;

  /// Demazure operator (f[w] - e^{-w a_i} f[ws]) / (1 - e^{-w a_i}), a_i the simple coroot.
  GkmClass demazure(int i, const GkmClass& f) const;
  /// Demazure operator plus the same operator with f[w] and f[ws] exchanged.
  GkmClass pushpull(int i, const GkmClass& f) const;
  /// epsilon * pushpull - id, further twisted by the sign character.
  GkmClass right_simple(int i, const GkmClass& f, const SignConvention& conv) const;
  /// Right action of t^lambda v under a sign twist.
  GkmClass right_act(const AffineWeylElement& u, const GkmClass& f, SignTwist twist = SignTwist::kNone) const;
  int twist_sign(const AffineWeylElement& u, SignTwist twist) const;

  /// c_w: Demazure operators applied to the point class along a reduced word of w.
  const std::vector<GkmClass>& schubert_basis() const;
  /// Coefficients in the Schubert basis; nullopt if f is not an integral combination.
  std::optional<std::vector<LaurentPoly>> schubert_coordinates(const GkmClass& f) const;

  /// Z[Lambda]-combination of Schubert classes with small random coefficients.
  GkmClass random_class(std::mt19937_64& rng, int max_terms = 2, int exp_radius = 1) const;

 private:
  const WeylGroup* w_;
  std::vector<std::vector<LatticeVector>> w_simple_coroot_;  // [w][i] = w(alpha_i^vee)
  std::vector<int> reflection_;                               // positive root k -> s_beta
  mutable std::vector<GkmClass> schubert_;
  std::vector<int> descending_;  // Weyl elements, longest first
};

/// The Schubert matrix is Bruhat-triangular, so its determinant is kept factored:
/// unit * prod_k (1 - e^{beta_k^vee})^{exponents[k]}. The certificate asks for
/// every exponent to equal |W|/2.
struct FreenessResult {
  int rank = 0;
  LaurentPoly unit;
  std::vector<int> exponents;
  std::vector<LatticeVector> coroots;  // beta_k^vee, matching exponents
  LaurentPoly determinant;  // only filled when the matrix is not triangular
  bool certificate = false;
  std::string factored() const;
};
FreenessResult freeness_check(const GkmModel& model);

struct CyclicityResult {
  bool cyclic = false;
  bool integral = false;    // every Steinberg class has Schubert coordinates in Z[Lambda]
  int weight_family = 0;    // +1 or -1 for lambda_v = +-v(sum of fundamental coweights at descents)
  LaurentPoly transition_det;
  std::vector<LatticeVector> weights;  // lambda_v, indexed by Weyl element
};
/// Whether the unit class generates the model under left Lambda and right translations,
/// certified through the Steinberg line-bundle classes.
CyclicityResult cyclicity_check(const GkmModel& model);

/// Rank over Frac(Z[Lambda]) of the joint fixed space of the right simple reflections in P.
int parabolic_invariants_rank(const GkmModel& model, const std::vector<int>& parabolic);

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  int samples = 6;        // random classes per relation
  int window_radius = 2;  // lattice window for the twist relations
};

struct BimoduleReport {
  std::string root_datum;
  std::vector<std::pair<std::string, bool>> relation_checks;
  int freeness_rank = 0;
  bool freeness_certificate = false;
  SignConvention chosen;
  std::vector<SignConvention> admissible;
  bool iso_found = false;
  std::string cyclicity_lattice;
  bool cyclic_in_given_lattice = false;
  LaurentPoly witness;              // transition determinant of the Steinberg window
  LaurentPoly freeness_determinant;
  std::map<std::string, int> parabolic_ranks;
  std::uint64_t seed = 0;

  bool all_relations_pass() const;
};
BimoduleReport verify_cc_bimodule(const RootDatum& rd, const VerifyOptions& opts = {});

}  // namespace kshadow
