#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "refloor/error.hpp"

namespace refloor {

/// Exact rational scalar. GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Laurent polynomial in q^{1/2} with rational coefficients.
///
/// A term (e, c) stands for c * q^{e/2}. Terms are kept sorted by strictly
/// increasing e and never store a zero coefficient, so structural equality is
/// value equality and the empty term list is zero.
class HalfLaurent {
 public:
  using Term = std::pair<int, Rational>;

  HalfLaurent() = default;
  HalfLaurent(long constant) : HalfLaurent(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  HalfLaurent(const Rational& constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace_back(0, constant);
  }

  static HalfLaurent monomial(int halves, const Rational& coefficient = 1) {
    HalfLaurent p;
    if (coefficient != 0) p.terms_.emplace_back(halves, coefficient);
    return p;
  }

  /// Builds from arbitrary (possibly unsorted, repeated, zero) terms.
  static HalfLaurent from_terms(std::vector<Term> terms) {
    std::map<int, Rational> acc;
    for (auto& [e, c] : terms) acc[e] += c;
    return from_map(acc);
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  int min_halves() const { return terms_.empty() ? 0 : terms_.front().first; }
  int max_halves() const { return terms_.empty() ? 0 : terms_.back().first; }

  Rational coefficient(int halves) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), halves,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == halves) return it->second;
    return 0;
  }

  /// True when every exponent is an integer power of q.
  bool has_integer_powers() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first % 2 == 0; });
  }

  bool has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.second.get_den() == 1; });
  }

  HalfLaurent& operator+=(const HalfLaurent& rhs) { return *this = *this + rhs; }
  HalfLaurent& operator-=(const HalfLaurent& rhs) { return *this = *this - rhs; }
  HalfLaurent& operator*=(const HalfLaurent& rhs) { return *this = *this * rhs; }

  friend HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b) { return merge(a, b, 1); }
  friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) { return merge(a, b, -1); }
  friend HalfLaurent operator-(const HalfLaurent& a) { return merge(HalfLaurent{}, a, -1); }

  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<int, Rational> acc;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    return from_map(acc);
  }

  friend HalfLaurent operator*(const HalfLaurent& a, const Rational& s) {
    if (s == 0) return {};
    HalfLaurent r = a;
    for (auto& t : r.terms_) t.second *= s;
    return r;
  }
  friend HalfLaurent operator*(const Rational& s, const HalfLaurent& a) { return a * s; }
  friend HalfLaurent operator/(const HalfLaurent& a, const Rational& s) {
    if (s == 0) throw Error(ErrorKind::DivisionByZero, "scalar division by zero");
    return a * Rational(1 / s);
  }

  /// Multiplies by q^{halves/2}.
  HalfLaurent shifted(int halves) const {
    HalfLaurent r = *this;
    for (auto& t : r.terms_) t.first += halves;
    return r;
  }

  HalfLaurent pow(unsigned exponent) const {
    HalfLaurent result(1L), base = *this;
    while (exponent) {
      if (exponent & 1U) result *= base;
      exponent >>= 1U;
      if (exponent) base *= base;
    }
    return result;
  }

  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }

 private:
  static HalfLaurent from_map(const std::map<int, Rational>& acc) {
    HalfLaurent p;
    p.terms_.reserve(acc.size());
    for (const auto& [e, c] : acc)
      if (c != 0) p.terms_.emplace_back(e, c);
    return p;
  }

  static HalfLaurent merge(const HalfLaurent& a, const HalfLaurent& b, int sign) {
    HalfLaurent r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        r.terms_.emplace_back(ib->first, sign > 0 ? ib->second : Rational(-ib->second));
        ++ib;
      } else {
        Rational c = sign > 0 ? Rational(ia->second + ib->second) : Rational(ia->second - ib->second);
        if (c != 0) r.terms_.emplace_back(ia->first, c);
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

/// [n]_q = q^{-(n-1)/2} + q^{-(n-3)/2} + ... + q^{(n-1)/2}; [0]_q = 0.
inline HalfLaurent quantum_integer(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArguments, "quantum integer of negative n");
  std::vector<HalfLaurent::Term> terms;
  terms.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) terms.emplace_back(2 * j - (n - 1), Rational(1));
  return HalfLaurent::from_terms(std::move(terms));
}

/// Exact quotient in the Laurent ring; throws NotDivisible when a remainder is left.
inline HalfLaurent div_exact(const HalfLaurent& num, const HalfLaurent& den);

/// Coefficient of x^{n-1} in the q-derivative of x^n. Equal to [n]_q.
inline HalfLaurent q_derivative_coefficient(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArguments, "q-derivative coefficient needs n >= 1");
  // (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2})
  return div_exact(HalfLaurent::monomial(n) - HalfLaurent::monomial(-n),
                   HalfLaurent::monomial(1) - HalfLaurent::monomial(-1));
}

inline HalfLaurent div_exact(const HalfLaurent& num, const HalfLaurent& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  const int den_span = den.max_halves() - den.min_halves();
  const Rational& den_lead = den.terms().back().second;
  HalfLaurent quotient;
  HalfLaurent rem = num;
  // A nonzero multiple of den spans at least den_span, so once the remainder is
  // narrower than that it can never vanish.
  while (!rem.is_zero() && rem.max_halves() - rem.min_halves() >= den_span) {
    HalfLaurent t = HalfLaurent::monomial(rem.max_halves() - den.max_halves(), rem.terms().back().second / den_lead);
    quotient += t;
    rem -= t * den;
  }
  if (!rem.is_zero()) throw Error(ErrorKind::NotDivisible, "polynomial division leaves a remainder");
  return quotient;
}

/// Value at q^{1/2} = 1.
inline Rational eval_q1(const HalfLaurent& p) {
  Rational s = 0;
  for (const auto& t : p.terms()) s += t.second;
  return s;
}

/// Value at q = -1; only defined when no half powers are present.
inline Rational eval_qm1(const HalfLaurent& p) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) throw Error(ErrorKind::HalfPowerAtMinusOne, "odd power of q^{1/2} at q = -1");
    s += ((e / 2) % 2 == 0) ? c : Rational(-c);
  }
  return s;
}

inline bool is_palindromic(const HalfLaurent& p) {
  const auto& t = p.terms();
  for (size_t i = 0, j = t.size(); i < t.size(); ++i) {
    --j;
    if (t[i].first != -t[j].first || t[i].second != t[j].second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace detail {

inline std::string monomial_text(int halves) {
  if (halves == 0) return "";
  if (halves == 2) return "q";
  if (halves % 2 == 0) return "q^{" + std::to_string(halves / 2) + "}";
  return "q^{" + std::to_string(halves) + "/2}";
}

inline std::string signed_join(const std::vector<std::pair<bool, std::string>>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    const auto& [negative, body] = parts[i];
    if (i == 0)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace detail

/// Canonical text, ascending exponents: "q^{-1} + 2 + q", "1/2*q^{1/2}".
inline std::string to_string(const HalfLaurent& p) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    std::string mono = detail::monomial_text(e);
    std::string body;
    if (mono.empty())
      body = mag.get_str();
    else if (mag == 1)
      body = mono;
    else
      body = mag.get_str() + "*" + mono;
    parts.emplace_back(c < 0, std::move(body));
  }
  return detail::signed_join(parts);
}

/// Writes a palindromic polynomial as a combination of quantum integers,
/// largest first ("3[2]_q", "[5]_q + 1/2*[2]_q"). Any palindromic p has a
/// unique such expansion; other inputs fall back to the canonical text.
inline std::string to_quantum_basis_string(const HalfLaurent& p) {
  if (!is_palindromic(p)) return to_string(p);
  std::vector<std::pair<bool, std::string>> parts;
  HalfLaurent rem = p;
  while (!rem.is_zero()) {
    int n = rem.max_halves() + 1;
    Rational c = rem.terms().back().second;
    rem -= quantum_integer(n) * c;
    Rational mag = abs(c);
    std::string body;
    if (n == 1)
      body = mag.get_str();
    else if (mag == 1)
      body = "[" + std::to_string(n) + "]_q";
    else if (mag.get_den() == 1)
      body = mag.get_str() + "[" + std::to_string(n) + "]_q";
    else
      body = mag.get_str() + "*[" + std::to_string(n) + "]_q";
    parts.emplace_back(c < 0, std::move(body));
  }
  return detail::signed_join(parts);
}

namespace detail {

/// Recursive-descent reader for the canonical text and for expressions in
/// quantum integers such as "[2]_q^4+[4]_q^2+10[3]_q^2+67[2]_q^2+226".
class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : s_(text) {}

  HalfLaurent parse() {
    HalfLaurent v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == '[' || c == '(';
  }

  Integer natural() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Rational signed_rational() {
    bool negative = accept('-');
    if (!negative) accept('+');
    Rational r(natural());
    if (accept('/')) {
      Integer den = natural();
      if (den == 0) fail("zero denominator");
      r = make_rational(r.get_num(), den);
    }
    return negative ? Rational(-r) : r;
  }

  HalfLaurent expr() {
    HalfLaurent v;
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    v = term();
    if (negative) v = -v;
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        break;
    }
    return v;
  }

  HalfLaurent term() {
    HalfLaurent v = power();
    for (;;) {
      if (accept('*')) {
        v *= power();
      } else if (accept('/')) {
        HalfLaurent d = power();
        v = d.is_constant() ? v / d.coefficient(0) : div_exact(v, d);
      } else if (starts_primary()) {
        v *= power();
      } else {
        break;
      }
    }
    return v;
  }

  HalfLaurent power() {
    HalfLaurent base = primary();
    if (!accept('^')) return base;
    Rational e;
    if (accept('{')) {
      e = signed_rational();
      expect('}');
    } else if (accept('(')) {
      e = signed_rational();
      expect(')');
    } else {
      e = Rational(natural());
    }
    if (e.get_den() == 1 && e >= 0) return base.pow(static_cast<unsigned>(e.get_num().get_ui()));
    if (!base.is_monomial()) fail("non-integer or negative power of a non-monomial");
    const auto& [h, c] = base.terms().front();
    Rational halves = Rational(h) * e;
    if (halves.get_den() != 1) fail("exponent is not a multiple of 1/2");
    Rational coeff = 1;
    if (c != 1) {
      if (e.get_den() != 1) fail("fractional power of a coefficient");
      long n = e.get_num().get_si();
      Rational b = n >= 0 ? c : Rational(1 / c);
      for (long i = 0; i < std::labs(n); ++i) coeff *= b;
    }
    return HalfLaurent::monomial(static_cast<int>(halves.get_num().get_si()), coeff);
  }

  HalfLaurent primary() {
    skip();
    if (accept('(')) {
      HalfLaurent v = expr();
      expect(')');
      return v;
    }
    if (accept('[')) {
      Integer n = natural();
      expect(']');
      if (accept('_')) {
        if (!accept('q')) fail("expected '_q'");
      }
      return quantum_integer(static_cast<int>(n.get_si()));
    }
    if (accept('q')) return HalfLaurent::monomial(2);
    return HalfLaurent(Rational(natural()));
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace detail

/// Reads the canonical text format, or any arithmetic expression over
/// integers, fractions, q, q^{e/2} and [n]_q.
inline HalfLaurent parse_half_laurent(std::string_view text) { return detail::ExpressionParser(text).parse(); }

}  // namespace refloor
