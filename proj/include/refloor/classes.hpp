#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "refloor/error.hpp"

namespace refloor {

inline constexpr int kMaxBlownUpPoints = 6;

/// d = a·L − Σ b_i·E_i on the blow-up of the plane at k points of a conic.
///
/// Pairings use L² = 1, L·E_i = 0, E_i·E_j = −δ_ij and [E] = 2L − ΣE_i.
class CurveClass {
 public:
  CurveClass() = default;
  CurveClass(int a, std::vector<int> b) : a_(a), b_(std::move(b)) {
    if (static_cast<int>(b_.size()) > kMaxBlownUpPoints)
      throw Error(ErrorKind::InvalidArguments,
                  "at most " + std::to_string(kMaxBlownUpPoints) + " blown-up points are supported");
  }

  static CurveClass line(int k) { return {1, std::vector<int>(static_cast<size_t>(k), 0)}; }
  static CurveClass conic(int k) { return {2, std::vector<int>(static_cast<size_t>(k), 1)}; }
  /// l·[E_i], 1-based index.
  static CurveClass exceptional(int k, int index, int l = 1) {
    if (index < 1 || index > k) throw Error(ErrorKind::IndexOutOfRange, "exceptional index out of range");
    std::vector<int> b(static_cast<size_t>(k), 0);
    b[static_cast<size_t>(index - 1)] = -l;
    return {0, std::move(b)};
  }

  int k() const noexcept { return static_cast<int>(b_.size()); }
  int a() const noexcept { return a_; }
  const std::vector<int>& b() const noexcept { return b_; }
  int b_sum() const { return std::accumulate(b_.begin(), b_.end(), 0); }

  int dot_L() const noexcept { return a_; }
  int dot_E() const { return 2 * a_ - b_sum(); }
  int dot_Ei(int i) const {
    if (i < 1 || i > k()) throw Error(ErrorKind::IndexOutOfRange, "E_" + std::to_string(i) + " with k=" + std::to_string(k()));
    return b_[static_cast<size_t>(i - 1)];
  }
  int c1_dot() const { return 3 * a_ - b_sum(); }

  /// d − j·[E]
  CurveClass sub_conic(int j) const {
    if (j < 0) throw Error(ErrorKind::InvalidArguments, "sub_conic needs j >= 0");
    CurveClass r = *this;
    r.a_ -= 2 * j;
    for (int& bi : r.b_) bi -= j;
    return r;
  }

  /// (index, l) when d = l·[E_index] with l >= 1.
  std::optional<std::pair<int, int>> is_exceptional() const {
    if (a_ != 0) return std::nullopt;
    std::optional<std::pair<int, int>> found;
    for (int i = 0; i < k(); ++i) {
      if (b_[static_cast<size_t>(i)] == 0) continue;
      if (b_[static_cast<size_t>(i)] > 0 || found) return std::nullopt;
      found = std::make_pair(i + 1, -b_[static_cast<size_t>(i)]);
    }
    return found;
  }

  /// Class with b sorted descending; only meaningful as a memo key.
  CurveClass canonical_key() const {
    CurveClass r = *this;
    std::sort(r.b_.begin(), r.b_.end(), std::greater<>());
    return r;
  }

  bool all_Ei_nonnegative() const {
    return std::all_of(b_.begin(), b_.end(), [](int v) { return v >= 0; });
  }

  friend CurveClass operator+(const CurveClass& x, const CurveClass& y) {
    check_same_k(x, y);
    CurveClass r = x;
    r.a_ += y.a_;
    for (size_t i = 0; i < r.b_.size(); ++i) r.b_[i] += y.b_[i];
    return r;
  }
  friend CurveClass operator-(const CurveClass& x, const CurveClass& y) {
    check_same_k(x, y);
    CurveClass r = x;
    r.a_ -= y.a_;
    for (size_t i = 0; i < r.b_.size(); ++i) r.b_[i] -= y.b_[i];
    return r;
  }

  friend bool operator==(const CurveClass& x, const CurveClass& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const CurveClass& x, const CurveClass& y) { return !(x == y); }
  friend bool operator<(const CurveClass& x, const CurveClass& y) {
    return std::tie(x.a_, x.b_) < std::tie(y.a_, y.b_);
  }

 private:
  static void check_same_k(const CurveClass& x, const CurveClass& y) {
    if (x.k() != y.k()) throw Error(ErrorKind::InvalidArguments, "curve classes on different blow-ups");
  }

  int a_ = 0;
  std::vector<int> b_;
};

/// "a;b1,...,bk"
inline std::string to_string(const CurveClass& d) {
  std::string out = std::to_string(d.a()) + ";";
  for (int i = 0; i < d.k(); ++i) {
    if (i) out += ",";
    out += std::to_string(d.b()[static_cast<size_t>(i)]);
  }
  return out;
}

/// Reads "a;b1,...,bk"; k is the length of the list ("3;" has k = 0).
inline CurveClass parse_curve_class(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  auto semi = s.find(';');
  if (semi == std::string::npos) throw Error(ErrorKind::Parse, "curve class must look like \"a;b1,...,bk\": " + s);
  auto parse_int = [&](const std::string& tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw Error(ErrorKind::Parse, "bad integer '" + tok + "' in curve class " + s);
    return v;
  };
  int a = parse_int(s.substr(0, semi));
  std::vector<int> b;
  std::string rest = s.substr(semi + 1);
  if (!rest.empty()) {
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) b.push_back(parse_int(tok));
    if (rest.back() == ',') throw Error(ErrorKind::Parse, "trailing comma in curve class " + s);
  }
  return {a, std::move(b)};
}

}  // namespace refloor
