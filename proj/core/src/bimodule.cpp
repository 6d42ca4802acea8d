#include "kshadow/bimodule.hpp"

#include <algorithm>
#include <stdexcept>

namespace kshadow {

std::string to_string(SignTwist t) {
  switch (t) {
    case SignTwist::kAffine: return "affine";
    case SignTwist::kFinite: return "finite";
    case SignTwist::kNone: return "none";
  }
  return "none";
}

GkmModel::GkmModel(const WeylGroup& w) : w_(&w) {
  const auto& rd = root_datum();
  w_simple_coroot_.resize(w.order());
  for (int v = 0; v < w.order(); ++v)
    for (int i = 0; i < rd.rank(); ++i) w_simple_coroot_[v].push_back(rd.coroot(w.act_root(v, rd.simple_index(i))));

  reflection_.assign(rd.num_positive(), -1);
  for (int u = 0; u < w.order(); ++u)
    for (int i = 0; i < rd.rank(); ++i) {
      const int k = w.act_root(u, rd.simple_index(i));
      if (rd.is_positive_index(k) && reflection_[k] < 0)
        reflection_[k] = w.multiply(w.multiply(u, w.simple(i)), w.inverse(u));
    }

  descending_.resize(w.order());
  for (int v = 0; v < w.order(); ++v) descending_[v] = v;
  std::sort(descending_.begin(), descending_.end(), [&](int a, int b) {
    return w.length(a) != w.length(b) ? w.length(a) > w.length(b) : a > b;
  });

  const GkmClass p = point_class();
  schubert_.resize(w.order());
  for (int v = 0; v < w.order(); ++v) {
    GkmClass c = p;
    for (int i : w[v].word) c = demazure(i, c);
    schubert_[v] = std::move(c);
  }
}

GkmClass GkmModel::zero() const {
  return {std::vector<LaurentPoly>(size(), LaurentPoly(static_cast<std::size_t>(root_datum().rank())))};
}

GkmClass GkmModel::unit() const {
  return {std::vector<LaurentPoly>(size(), LaurentPoly::constant(root_datum().rank(), 1))};
}

GkmClass GkmModel::point_class() const {
  const auto& rd = root_datum();
  GkmClass p = zero();
  LaurentPoly c = LaurentPoly::constant(rd.rank(), 1);
  for (int k = 0; k < rd.num_positive(); ++k) c = c * LaurentPoly::one_minus(rd.coroot(k));
  p.coords[WeylGroup::identity()] = c;
  return p;
}

bool GkmModel::is_valid(const GkmClass& f) const {
  const auto& rd = root_datum();
  if (static_cast<int>(f.coords.size()) != size()) return false;
  for (int k = 0; k < rd.num_positive(); ++k) {
    const auto d = LaurentPoly::one_minus(rd.coroot(k));
    for (int v = 0; v < size(); ++v) {
      const int partner = w_->multiply(reflection_[k], v);
      if (partner < v) continue;
      if (!exact_divide(f.coords[v] - f.coords[partner], d)) return false;
    }
  }
  return true;
}

GkmClass GkmModel::add(const GkmClass& a, const GkmClass& b) const {
  GkmClass r = a;
  for (int v = 0; v < size(); ++v) r.coords[v] += b.coords[v];
  return r;
}

GkmClass GkmModel::scale(const LaurentPoly& c, const GkmClass& f) const {
  GkmClass r = f;
  for (auto& x : r.coords) x = c * x;
  return r;
}

GkmClass GkmModel::negate(const GkmClass& f) const {
  GkmClass r = f;
  for (auto& x : r.coords) x = -x;
  return r;
}

GkmClass GkmModel::left_lattice(const LatticeVector& lambda, const GkmClass& f) const {
  GkmClass r = f;
  for (auto& x : r.coords) x = x.shifted(lambda);
  return r;
}

GkmClass GkmModel::left_weyl(int v, const GkmClass& f) const {
  GkmClass r = zero();
  const int vinv = w_->inverse(v);
  for (int u = 0; u < size(); ++u)
    r.coords[u] = f.coords[w_->multiply(vinv, u)].map_exponents([&](const LatticeVector& e) { return w_->act(v, e); });
  return r;
}

GkmClass GkmModel::right_lattice(const LatticeVector& lambda, const GkmClass& f) const {
  GkmClass r = f;
  for (int u = 0; u < size(); ++u) r.coords[u] = r.coords[u].shifted(w_->act(u, lambda));
  return r;
}

GkmClass GkmModel::right_swap(int i, const GkmClass& f) const {
  GkmClass r = zero();
  for (int u = 0; u < size(); ++u) r.coords[u] = f.coords[w_->right_mult(u, i)];
  return r;
}

GkmClass GkmModel::right_weyl(int v, const GkmClass& f) const {
  GkmClass r = zero();
  const int vinv = w_->inverse(v);
  for (int u = 0; u < size(); ++u) r.coords[u] = f.coords[w_->multiply(u, vinv)];
  return r;
}

GkmClass GkmModel::demazure(int i, const GkmClass& f) const {
  GkmClass r = zero();
  for (int u = 0; u < size(); ++u) {
    const LatticeVector x = -w_simple_coroot_[u][i];
    const auto num = f.coords[u] - f.coords[w_->right_mult(u, i)].shifted(x);
    auto q = exact_divide(num, LaurentPoly::one_minus(x));
    if (!q) throw std::domain_error("Demazure quotient is not integral; the class violates edge divisibility");
    r.coords[u] = std::move(*q);
  }
  return r;
}

GkmClass GkmModel::pushpull(int i, const GkmClass& f) const { return add(demazure(i, f), demazure(i, right_swap(i, f))); }

GkmClass GkmModel::right_simple(int i, const GkmClass& f, const SignConvention& conv) const {
  GkmClass p = pushpull(i, f);
  for (auto& x : p.coords) x *= conv.epsilon.at(i);
  for (int u = 0; u < size(); ++u) p.coords[u] -= f.coords[u];
  return conv.twist == SignTwist::kNone ? p : negate(p);
}

int GkmModel::twist_sign(const AffineWeylElement& u, SignTwist twist) const {
  switch (twist) {
    case SignTwist::kAffine: return AffineWeylGroup(*w_).sign(u);
    case SignTwist::kFinite: return w_->sign(u.finite);
    case SignTwist::kNone: return 1;
  }
  return 1;
}

GkmClass GkmModel::right_act(const AffineWeylElement& u, const GkmClass& f, SignTwist twist) const {
  GkmClass r = right_weyl(u.finite, right_lattice(u.translation, f));
  return twist_sign(u, twist) > 0 ? r : negate(r);
}

const std::vector<GkmClass>& GkmModel::schubert_basis() const { return schubert_; }

std::optional<std::vector<LaurentPoly>> GkmModel::schubert_coordinates(const GkmClass& f) const {
  const std::size_t r = root_datum().rank();
  std::vector<LaurentPoly> x(size(), LaurentPoly(r));
  std::vector<int> done;
  for (int v : descending_) {
    LaurentPoly rest = f.coords[v];
    for (int u : done)
      if (!x[u].is_zero() && !schubert_[u].coords[v].is_zero()) rest -= x[u] * schubert_[u].coords[v];
    auto q = exact_divide(rest, schubert_[v].coords[v]);
    if (!q) return std::nullopt;
    x[v] = std::move(*q);
    done.push_back(v);
  }
  return x;
}

GkmClass GkmModel::random_class(std::mt19937_64& rng, int max_terms, int exp_radius) const {
  const int r = root_datum().rank();
  auto below = [&](std::uint64_t n) { return static_cast<int>(rng() % n); };
  GkmClass f = zero();
  for (int v = 0; v < size(); ++v) {
    const int terms = below(max_terms + 1);
    std::vector<LaurentPoly::Term> t;
    for (int j = 0; j < terms; ++j) {
      LatticeVector e(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) e[i] = below(2 * exp_radius + 1) - exp_radius;
      t.push_back({e, below(5) - 2});
    }
    f = add(f, scale(LaurentPoly::from_terms(r, std::move(t)), schubert_[v]));
  }
  return f;
}

FreenessResult freeness_check(const GkmModel& model) {
  const auto& w = model.weyl();
  const auto& rd = model.root_datum();
  const auto& basis = model.schubert_basis();
  FreenessResult res;

  bool triangular = true;
  for (int v = 0; v < w.order() && triangular; ++v)
    for (int u = 0; u < w.order() && triangular; ++u)
      if (!basis[v].coords[u].is_zero() && !w.bruhat_leq(u, v)) triangular = false;

  if (!triangular) {
    LaurentMatrix m(w.order());
    for (int v = 0; v < w.order(); ++v) m[v] = basis[v].coords;
    res.rank = fraction_field_rank(m);
    res.determinant = determinant(std::move(m));
  } else {
    res.rank = 0;
    for (int v = 0; v < w.order(); ++v) res.rank += !basis[v].coords[v].is_zero();
  }

  // Peel the factors 1 - e^{beta^vee} off each diagonal entry.
  res.exponents.assign(rd.num_positive(), 0);
  for (int k = 0; k < rd.num_positive(); ++k) res.coroots.push_back(rd.coroot(k));
  res.unit = LaurentPoly::constant(rd.rank(), 1);
  bool clean = triangular && res.rank == w.order();
  for (int v = 0; v < w.order() && clean; ++v) {
    LaurentPoly d = basis[v].coords[v];
    for (int k = 0; k < rd.num_positive(); ++k) {
      const auto f = LaurentPoly::one_minus(rd.coroot(k));
      while (auto q = exact_divide(d, f)) {
        d = std::move(*q);
        ++res.exponents[k];
      }
    }
    if (!d.is_unit()) clean = false;
    res.unit = res.unit * d;
  }
  res.certificate = clean;
  for (int e : res.exponents) res.certificate = res.certificate && 2 * e == w.order();
  return res;
}

std::string FreenessResult::factored() const {
  std::string s = unit.to_string();
  for (std::size_t k = 0; k < exponents.size(); ++k)
    if (exponents[k]) s += " * (1 - e(" + coroots[k].to_string() + "))^" + std::to_string(exponents[k]);
  return s;
}

namespace {

// v applied to the sum of fundamental coweights at the descents of v; nullopt when
// those coweights are not in the lattice.
std::optional<LatticeVector> descent_weight(const RootDatum& rd, const WeylGroup& w, int v) {
  LatticeVector s = rd.zero();
  for (int i = 0; i < rd.rank(); ++i) {
    if (!w.has_right_descent(v, i)) continue;
    std::vector<std::int64_t> p(rd.rank(), 0);
    p[i] = 1;
    const auto fund = rd.from_pairings(p);
    if (!fund) return std::nullopt;
    s += *fund;
  }
  return w.act(v, s);
}

}  // namespace

CyclicityResult cyclicity_check(const GkmModel& model) {
  const auto& w = model.weyl();
  const auto& rd = model.root_datum();
  CyclicityResult best;
  for (int family : {1, -1}) {
    CyclicityResult res;
    res.weight_family = family;
    bool in_lattice = true;
    for (int v = 0; v < w.order(); ++v) {
      auto lam = descent_weight(rd, w, v);
      if (!lam) {
        in_lattice = false;
        break;
      }
      res.weights.push_back(family * *lam);
    }
    if (!in_lattice) return res;
    LaurentMatrix t;
    res.integral = true;
    for (int v = 0; v < w.order() && res.integral; ++v) {
      auto c = model.schubert_coordinates(model.right_lattice(res.weights[v], model.unit()));
      if (!c) res.integral = false;
      else t.push_back(std::move(*c));
    }
    if (res.integral) {
      res.transition_det = determinant(std::move(t));
      res.cyclic = res.transition_det.is_unit();
    }
    if (res.cyclic) return res;
    if (family == 1) best = std::move(res);
  }
  return best;
}

int parabolic_invariants_rank(const GkmModel& model, const std::vector<int>& parabolic) {
  const int n = model.size();
  if (parabolic.empty()) return n;
  const auto& basis = model.schubert_basis();
  const std::size_t r = model.root_datum().rank();
  LaurentMatrix m(n);
  for (int i : parabolic) {
    if (i < 0 || i >= model.root_datum().rank()) throw std::out_of_range("parabolic generator");
    for (int v = 0; v < n; ++v) {
      auto c = model.schubert_coordinates(model.right_swap(i, basis[v]));
      if (!c) throw std::logic_error("right action left the Schubert lattice");
      (*c)[v] -= LaurentPoly::constant(r, 1);
      m[v].insert(m[v].end(), c->begin(), c->end());
    }
  }
  return n - fraction_field_rank(std::move(m));
}

}  // namespace kshadow

namespace kshadow {

bool BimoduleReport::all_relations_pass() const {
  return std::all_of(relation_checks.begin(), relation_checks.end(), [](const auto& c) { return c.second; });
}

namespace {

class Battery {
 public:
  Battery(const GkmModel& m, const VerifyOptions& opts) : m_(m), aff_(m.weyl()), rng_(opts.seed) {
    for (int j = 0; j < opts.samples; ++j) classes_.push_back(m.random_class(rng_));
    classes_.push_back(m.unit());
    window_ = lattice_window(m.root_datum(), opts.window_radius);
  }

  const std::vector<GkmClass>& classes() const { return classes_; }
  const std::vector<LatticeVector>& window() const { return window_; }
  std::mt19937_64& rng() { return rng_; }

  LatticeVector random_weight() {
    const auto& win = window_;
    return win[rng_() % win.size()];
  }

  AffineWeylElement random_affine() {
    return {random_weight(), static_cast<int>(rng_() % static_cast<std::uint64_t>(m_.size()))};
  }

  bool right_relations(const SignConvention& conv, std::size_t limit) const {
    const auto& w = m_.weyl();
    const int r = m_.root_datum().rank();
    for (std::size_t j = 0; j < std::min(limit, classes_.size()); ++j) {
      const auto& f = classes_[j];
      for (int i = 0; i < r; ++i)
        if (m_.right_simple(i, m_.right_simple(i, f, conv), conv) != f) return false;
      for (int i = 0; i < r; ++i)
        for (int k = i + 1; k < r; ++k) {
          GkmClass a = f, b = f;
          for (int n = 0; n < w.coxeter_order(i, k); ++n) {
            a = m_.right_simple(n % 2 ? k : i, a, conv);
            b = m_.right_simple(n % 2 ? i : k, b, conv);
          }
          if (a != b) return false;
        }
      for (int i = 0; i < r; ++i)
        for (const auto& lam : {m_.root_datum().simple_coroot(i), window_.front()}) {
          GkmClass g = m_.right_simple(i, f, conv);
          g = m_.right_act(aff_.translation(lam), g, conv.twist);
          g = m_.right_simple(i, g, conv);
          if (g != m_.right_act(aff_.translation(m_.root_datum().reflect(i, lam)), f, conv.twist)) return false;
        }
    }
    return true;
  }

 private:
  const GkmModel& m_;
  AffineWeylGroup aff_;
  std::mt19937_64 rng_;
  std::vector<GkmClass> classes_;
  std::vector<LatticeVector> window_;
};

std::vector<SignConvention> all_conventions(int rank) {
  std::vector<SignConvention> out;
  for (SignTwist t : {SignTwist::kAffine, SignTwist::kFinite, SignTwist::kNone})
    for (int mask = 0; mask < (1 << rank); ++mask) {
      SignConvention c;
      c.twist = t;
      for (int i = 0; i < rank; ++i) c.epsilon.push_back((mask >> i) & 1 ? -1 : 1);
      out.push_back(c);
    }
  return out;
}

}  // namespace

BimoduleReport verify_cc_bimodule(const RootDatum& rd, const VerifyOptions& opts) {
  if (rd.rank() > 3) throw std::invalid_argument("verify_cc_bimodule supports rank <= 3");
  BimoduleReport rep;
  rep.root_datum = rd.fingerprint();
  rep.seed = opts.seed;

  const WeylGroup w(rd);
  const GkmModel m(w);
  const AffineWeylGroup aff(w);
  Battery bat(m, opts);
  const int r = rd.rank();
  const auto& fs = bat.classes();
  auto check = [&](const std::string& name, bool ok) { rep.relation_checks.emplace_back(name, ok); };
  auto for_all = [&](auto&& pred) { return std::all_of(fs.begin(), fs.end(), pred); };

  for (const auto& conv : all_conventions(r))
    if (bat.right_relations(conv, 2)) rep.admissible.push_back(conv);
  if (!rep.admissible.empty()) rep.chosen = rep.admissible.front();
  const SignConvention conv = rep.chosen.epsilon.empty() ? all_conventions(r).front() : rep.chosen;

  check("gkm_closure", for_all([&](const GkmClass& f) {
          if (!m.is_valid(f)) return false;
          for (int i = 0; i < r; ++i) {
            const auto lam = rd.simple_coroot(i);
            for (const auto& g : {m.left_lattice(lam, f), m.left_weyl(w.simple(i), f), m.right_lattice(lam, f),
                                  m.demazure(i, f), m.pushpull(i, f), m.right_simple(i, f, conv)})
              if (!m.is_valid(g)) return false;
          }
          return true;
        }));

  check("left_lattice_additive", for_all([&](const GkmClass& f) {
          const auto a = bat.random_weight(), b = bat.random_weight();
          return m.left_lattice(a, m.left_lattice(b, f)) == m.left_lattice(a + b, f);
        }));
  check("left_weyl_quadratic", for_all([&](const GkmClass& f) {
          for (int i = 0; i < r; ++i)
            if (m.left_weyl(w.simple(i), m.left_weyl(w.simple(i), f)) != f) return false;
          return true;
        }));
  check("left_weyl_braid", for_all([&](const GkmClass& f) {
          for (int i = 0; i < r; ++i)
            for (int k = i + 1; k < r; ++k) {
              GkmClass g = f;
              for (int n = 0; n < w.coxeter_order(i, k); ++n) g = m.left_weyl(w.simple(i), m.left_weyl(w.simple(k), g));
              if (g != f) return false;
            }
          return true;
        }));
  check("left_lattice_twist", for_all([&](const GkmClass& f) {
          for (int i = 0; i < r; ++i)
            for (const auto& lam : bat.window()) {
              const int s = w.simple(i);
              if (m.left_weyl(s, m.left_lattice(lam, m.left_weyl(s, f))) != m.left_lattice(rd.reflect(i, lam), f))
                return false;
            }
          return true;
        }));

  check("demazure_idempotent", for_all([&](const GkmClass& f) {
          for (int i = 0; i < r; ++i)
            if (m.demazure(i, m.demazure(i, f)) != m.demazure(i, f)) return false;
          return true;
        }));
  check("pushpull_quadratic", for_all([&](const GkmClass& f) {
          for (int i = 0; i < r; ++i) {
            auto p = m.pushpull(i, f);
            auto twice = m.add(p, p);
            if (m.pushpull(i, p) != twice) return false;
          }
          return true;
        }));
  check("pushpull_unit_eigenvector", [&] {
    const auto u = m.unit();
    for (int i = 0; i < r; ++i)
      if (m.pushpull(i, u) != m.add(u, u)) return false;
    return true;
  }());

  check("right_quadratic_braid_twist", bat.right_relations(conv, fs.size()));
  check("right_lattice_additive", for_all([&](const GkmClass& f) {
          const auto a = bat.random_weight(), b = bat.random_weight();
          return m.right_lattice(a, m.right_lattice(b, f)) == m.right_lattice(a + b, f);
        }));
  check("right_group_law", for_all([&](const GkmClass& f) {
          for (int t = 0; t < 4; ++t) {
            const auto u = bat.random_affine(), v = bat.random_affine();
            const auto lhs = m.right_act(v, m.right_act(u, f, conv.twist), conv.twist);
            if (lhs != m.right_act(aff.multiply(u, v), f, conv.twist)) return false;
          }
          return true;
        }));
  check("reduced_word_composition", for_all([&](const GkmClass& f) {
          for (int v = 0; v < w.order(); ++v) {
            GkmClass g = f;
            for (int i : w[v].word) g = m.right_simple(i, g, conv);
            if (g != m.right_act(aff.finite_element(v), f, conv.twist)) return false;
          }
          return true;
        }));
  check("left_right_commute", for_all([&](const GkmClass& f) {
          for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k) {
              const auto lam = bat.random_weight(), mu = bat.random_weight();
              const int s = w.simple(i);
              if (m.left_lattice(lam, m.right_lattice(mu, f)) != m.right_lattice(mu, m.left_lattice(lam, f))) return false;
              if (m.left_weyl(s, m.right_lattice(mu, f)) != m.right_lattice(mu, m.left_weyl(s, f))) return false;
              if (m.left_lattice(lam, m.right_simple(k, f, conv)) != m.right_simple(k, m.left_lattice(lam, f), conv))
                return false;
              if (m.left_weyl(s, m.right_simple(k, f, conv)) != m.right_simple(k, m.left_weyl(s, f), conv)) return false;
            }
          return true;
        }));
  check("unit_left_w_invariant", [&] {
    const auto u = m.unit();
    for (int v = 0; v < w.order(); ++v)
      if (m.left_weyl(v, u) != u) return false;
    return true;
  }());

  const auto fr = freeness_check(m);
  rep.freeness_rank = fr.rank;
  rep.freeness_certificate = fr.certificate;
  rep.freeness_determinant = fr.unit;
  check("freeness_certificate", fr.certificate && fr.rank == w.order());

  // Cyclicity needs a connected center on the group side, so it is certified on the adjoint form.
  rep.cyclic_in_given_lattice = cyclicity_check(m).cyclic;
  const RootDatum adj(rd.family(), rd.rank(), LatticeMode::kAdjoint);
  const WeylGroup wadj(adj);
  const GkmModel madj(wadj);
  const auto cy = cyclicity_check(madj);
  rep.cyclicity_lattice = to_string(LatticeMode::kAdjoint);
  rep.witness = cy.transition_det;
  check("unit_cyclic", cy.cyclic);

  if (r <= 2) {
    for (int mask = 0; mask < (1 << r); ++mask) {
      std::vector<int> gens;
      std::string key = "{";
      for (int i = 0; i < r; ++i)
        if ((mask >> i) & 1) {
          key += (gens.empty() ? "s" : ",s") + std::to_string(i + 1);
          gens.push_back(i);
        }
      key += "}";
      const int got = parabolic_invariants_rank(m, gens);
      rep.parabolic_ranks[key] = got;
      check("parabolic_rank" + key, got * static_cast<int>(w.parabolic(gens).size()) == w.order());
    }
  }

  rep.iso_found = !rep.admissible.empty() && rep.freeness_rank == w.order() && rep.all_relations_pass();
  return rep;
}

}  // namespace kshadow
