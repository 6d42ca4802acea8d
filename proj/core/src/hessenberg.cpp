#include "kshadow/hessenberg.hpp"

#include <algorithm>
#include <stdexcept>

namespace kshadow {

namespace {

void check_size(const RootDatum& rd, std::span<const std::int64_t> p) {
  if (static_cast<int>(p.size()) != rd.num_roots()) throw std::invalid_argument("pairing table has wrong length");
}

}  // namespace

std::vector<std::int64_t> root_pairings(const RootDatum& rd, const LatticeVector& lambda) {
  std::vector<std::int64_t> p(rd.num_roots());
  for (int k = 0; k < rd.num_roots(); ++k) p[k] = rd.pair(k, lambda);
  return p;
}

std::vector<std::int64_t> gl_root_pairings(const RootDatum& rd, std::span<const std::int64_t> gl) {
  if (rd.family() != 'A') throw std::invalid_argument("GL coordinates need type A");
  if (static_cast<int>(gl.size()) != rd.rank() + 1)
    throw std::invalid_argument("GL_n coordinates need n = rank + 1 entries");
  std::vector<std::int64_t> p(rd.num_roots());
  for (int k = 0; k < rd.num_roots(); ++k) {
    const auto alpha = rd.root(k);
    std::int64_t s = 0;
    for (int i = 0; i < rd.rank(); ++i) s += alpha[i] * (gl[i + 1] - gl[i]);
    p[k] = s;
  }
  return p;
}

std::vector<int> borel_roots(const RootDatum& rd, std::span<const std::int64_t> p) {
  check_size(rd, p);
  std::vector<int> out;
  for (int k = 0; k < rd.num_roots(); ++k)
    if (rd.is_positive_index(k) ? p[k] <= 0 : p[k] <= -1) out.push_back(k);
  if (static_cast<int>(out.size()) != rd.num_positive()) throw std::logic_error("B_lambda has the wrong number of roots");
  return out;
}

std::vector<int> hessenberg_roots(const RootDatum& rd, std::span<const std::int64_t> p) {
  check_size(rd, p);
  std::vector<int> out;
  for (int k = 0; k < rd.num_roots(); ++k)
    if (rd.is_positive_index(k) ? p[k] <= 1 : p[k] <= 0) out.push_back(k);
  return out;
}

bool is_isolated(const RootDatum& rd, std::span<const std::int64_t> p) {
  check_size(rd, p);
  for (int k = 0; k < rd.num_positive(); ++k)
    if (p[k] == 0 || p[k] == 1) return false;
  return true;
}

HessenbergDatum hessenberg_datum(const WeylGroup& w, std::span<const std::int64_t> p) {
  const auto& rd = w.root_datum();
  HessenbergDatum h;
  h.simple_pairings.resize(rd.rank());
  for (int i = 0; i < rd.rank(); ++i) h.simple_pairings[i] = p[rd.simple_index(i)];
  h.borel_roots = borel_roots(rd, p);
  h.hess_roots = hessenberg_roots(rd, p);
  h.isolated = is_isolated(rd, p);

  std::vector<int> normal;
  std::set_difference(h.hess_roots.begin(), h.hess_roots.end(), h.borel_roots.begin(), h.borel_roots.end(),
                      std::back_inserter(normal));
  if (normal.size() + h.borel_roots.size() != h.hess_roots.size())
    throw std::logic_error("B_lambda is not contained in V_lambda");
  h.dim = static_cast<int>(normal.size());

  // Attracting cell for the cocharacter rho^vee: tangent directions w(alpha) that are positive.
  h.cells.resize(w.order());
  h.betti.assign(h.dim + 1, 0);
  for (int v = 0; v < w.order(); ++v) {
    int c = 0;
    for (int k : normal) c += rd.is_positive_index(w.act_root(v, k));
    h.cells[v] = c;
    ++h.betti[c];
  }
  return h;
}

HessenbergDatum hessenberg_datum(const WeylGroup& w, const LatticeVector& lambda) {
  return hessenberg_datum(w, root_pairings(w.root_datum(), lambda));
}

}  // namespace kshadow
