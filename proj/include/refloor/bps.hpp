#pragma once

#include <map>
#include <string>

#include "refloor/chrec.hpp"
#include "refloor/classes.hpp"
#include "refloor/counts.hpp"
#include "refloor/error.hpp"
#include "refloor/partitions.hpp"
#include "refloor/qalgebra.hpp"

namespace refloor {

/// Π [m]_q / m over the entries of μ1 and μ2.
inline HalfLaurent tangency_factor(const Partition& mu1, const Partition& mu2) {
  HalfLaurent f(1L);
  for (const auto* p : {&mu1, &mu2})
    for (int m : p->entries()) f = f * quantum_integer(m) / Rational(m);
  return f;
}

/// Relative BPS polynomial from an already computed refined count.
inline HalfLaurent relative_bps(const CHKey& key, const HalfLaurent& count) {
  return div_exact(count, tangency_factor(key.mu1, key.mu2));
}

inline HalfLaurent relative_bps(const CHKey& key) { return relative_bps(key, ch_count(key)); }

/// Throws IntegralityFailure unless p lies in Z[q, q^{-1}].
inline void require_integral(const HalfLaurent& p, const std::string& what) {
  if (!p.has_integer_powers()) throw Error(ErrorKind::IntegralityFailure, what + " has half-integer powers of q");
  if (!p.has_integer_coefficients()) throw Error(ErrorKind::IntegralityFailure, what + " has non-integer coefficients");
}

/// BPS polynomial of the degree ≥ 4 del Pezzo surface X_k, k ≤ 5.
inline HalfLaurent bps_delpezzo_high(const CurveClass& d, int genus) {
  if (d.k() > 5) throw Error(ErrorKind::SpecInvalid, "del Pezzo BPS polynomials here need k <= 5");
  if (d.dot_L() <= 0) throw Error(ErrorKind::SpecInvalid, "d.L must be positive");
  if (d.dot_E() < 0) throw Error(ErrorKind::SpecInvalid, "d.E must be non-negative");
  if (d.c1_dot() + genus - 1 < 0) throw Error(ErrorKind::SpecInvalid, "c1.d + g' - 1 must be non-negative");
  const CHKey key{d, genus, {}, Partition::repeated(1, d.dot_E())};
  HalfLaurent p = ch_count(key);
  require_integral(p, "BPS polynomial of " + to_string(d));
  return p;
}

/// BPS polynomial of the cubic surface from counts on X'_6 of the classes
/// d − j[E] with tangency (1^{d.E + 2j}).
inline HalfLaurent bps_cubic(const CurveClass& d, int genus) {
  if (d.k() != 6) throw Error(ErrorKind::SpecInvalid, "cubic-surface BPS polynomials need k = 6");
  if (d.dot_L() <= 0) throw Error(ErrorKind::SpecInvalid, "d.L must be positive");
  if (d.dot_E() < 0) throw Error(ErrorKind::SpecInvalid, "d.E must be non-negative");
  if (genus < 0) throw Error(ErrorKind::SpecInvalid, "genus must be non-negative");
  HalfLaurent total;
  for (int j = 0; d.sub_conic(j).dot_L() > 0; ++j) {
    const CurveClass dj = d.sub_conic(j);
    // a class meeting some E_i negatively carries no curves
    if (!dj.all_Ei_nonnegative()) continue;
    const int t = d.dot_E() + 2 * j;
    const CHKey key{dj, genus, {}, Partition::repeated(1, t)};
    total += ch_count(key) * Rational(multinomial(t, {j}));
  }
  require_integral(total, "cubic BPS polynomial of " + to_string(d));
  return total;
}

/// p = Σ_j c_j z^j with z = −(q − 2 + q^{-1}); c_j is the BPS invariant of
/// genus g' + j.
struct BpsDecomposition {
  int base_genus = 0;
  std::map<int, Rational> coefficients;
  HalfLaurent source;
};

/// z = −q + 2 − q^{-1}
inline HalfLaurent bps_basis_element() {
  return HalfLaurent::from_terms({{-2, Rational(-1)}, {0, Rational(2)}, {2, Rational(-1)}});
}

inline BpsDecomposition decompose_bps(const HalfLaurent& p, int base_genus) {
  if (!p.has_integer_powers()) throw Error(ErrorKind::NotPolynomialInQ, "half-integer powers of q present");
  if (!is_palindromic(p)) throw Error(ErrorKind::NotPalindromic, "polynomial is not symmetric under q -> 1/q");
  BpsDecomposition out;
  out.base_genus = base_genus;
  out.source = p;
  const HalfLaurent z = bps_basis_element();
  HalfLaurent rem = p;
  // z^j has top term (−1)^j q^j, so peel off the highest power first
  while (!rem.is_zero()) {
    const int j = rem.max_halves() / 2;
    Rational c = rem.terms().back().second;
    if (j % 2) c = -c;
    out.coefficients[j] = c;
    rem -= z.pow(static_cast<unsigned>(j)) * c;
  }
  return out;
}

inline HalfLaurent recompose(const BpsDecomposition& b) {
  const HalfLaurent z = bps_basis_element();
  HalfLaurent p;
  for (const auto& [j, c] : b.coefficients) p += z.pow(static_cast<unsigned>(j)) * c;
  return p;
}

inline Json to_json(const BpsDecomposition& b) {
  Json bps = Json::object();
  for (const auto& [j, c] : b.coefficients) bps["g" + std::to_string(b.base_genus + j)] = c.get_str();
  return Json{{"polynomial", to_json(b.source)}, {"bps", bps}};
}

}  // namespace refloor
