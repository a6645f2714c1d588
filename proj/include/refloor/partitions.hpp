#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "refloor/error.hpp"
#include "refloor/qalgebra.hpp"

namespace refloor {

/// Finite multiset of positive integers with an ordered view.
///
/// Entry order is kept where it carries meaning (the i-th tangency condition);
/// canonical() forgets it by sorting descending.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> entries) : Partition(std::vector<int>(entries)) {}
  explicit Partition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
      if (e < 1) throw Error(ErrorKind::InvalidArguments, "partition entries must be positive");
  }

  /// (w, w, ..., w) with `count` entries.
  static Partition repeated(int w, int count) { return Partition(std::vector<int>(static_cast<size_t>(count), w)); }

  const std::vector<int>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  int size() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }
  int length() const { return static_cast<int>(entries_.size()); }
  int count_of(int value) const { return static_cast<int>(std::count(entries_.begin(), entries_.end(), value)); }
  int operator[](size_t i) const { return entries_.at(i); }

  /// value -> multiplicity
  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int e : entries_) ++m[e];
    return m;
  }

  Partition canonical() const {
    Partition p = *this;
    std::sort(p.entries_.begin(), p.entries_.end(), std::greater<>());
    return p;
  }

  bool same_multiset(const Partition& other) const { return canonical() == other.canonical(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<int> entries_;
};

/// (μ, λ): entries of μ followed by those of λ.
inline Partition union_of(const Partition& mu, const Partition& lambda) {
  std::vector<int> e = mu.entries();
  e.insert(e.end(), lambda.entries().begin(), lambda.entries().end());
  return Partition(std::move(e));
}

inline bool is_sub(const Partition& lambda, const Partition& mu) {
  auto inner = lambda.multiplicities();
  auto outer = mu.multiplicities();
  for (const auto& [v, c] : inner) {
    auto it = outer.find(v);
    if (it == outer.end() || it->second < c) return false;
  }
  return true;
}

/// μ \ λ as multisets; the surviving entries keep their order in μ.
inline Partition diff(const Partition& mu, const Partition& lambda) {
  auto remove = lambda.multiplicities();
  std::vector<int> out;
  for (int e : mu.entries()) {
    auto it = remove.find(e);
    if (it != remove.end() && it->second > 0) {
      --it->second;
      continue;
    }
    out.push_back(e);
  }
  for (const auto& [v, c] : remove)
    if (c > 0) throw Error(ErrorKind::NotSubmultiset, "difference of a non-submultiset");
  return Partition(std::move(out));
}

inline Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// n! / (a_1! ... a_k! (n - Σa)!)
inline Integer multinomial(int n, const std::vector<int>& parts) {
  if (n < 0) throw Error(ErrorKind::InvalidArguments, "multinomial with negative n");
  int used = 0;
  for (int a : parts) {
    if (a < 0) throw Error(ErrorKind::InvalidArguments, "multinomial with a negative part");
    used += a;
  }
  if (used > n) throw Error(ErrorKind::InvalidArguments, "multinomial parts exceed n");
  Integer r = factorial(n);
  for (int a : parts) r /= factorial(a);
  r /= factorial(n - used);
  return r;
}

/// Π_i multinomial(i(μ); i(μ_1), ..., i(μ_k))
inline Integer partition_binomial(const Partition& mu, const std::vector<Partition>& parts) {
  std::map<int, int> used;
  for (const auto& p : parts)
    for (const auto& [v, c] : p.multiplicities()) used[v] += c;
  auto have = mu.multiplicities();
  for (const auto& [v, c] : used)
    if (have[v] < c) throw Error(ErrorKind::NotSubmultiset, "partition binomial parts are not contained in mu");
  Integer r = 1;
  for (const auto& [v, c] : have) {
    std::vector<int> counts;
    counts.reserve(parts.size());
    for (const auto& p : parts) counts.push_back(p.count_of(v));
    r *= multinomial(c, counts);
  }
  return r;
}

/// Every sub-multiset of μ exactly once, each sorted descending.
inline std::vector<Partition> sub_multisets(const Partition& mu) {
  auto mult = mu.multiplicities();
  std::vector<std::pair<int, int>> values(mult.rbegin(), mult.rend());
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == values.size()) {
      out.emplace_back(current);
      return;
    }
    for (int take = 0; take <= values[i].second; ++take) {
      current.insert(current.end(), static_cast<size_t>(take), values[i].first);
      rec(i + 1);
      current.resize(current.size() - static_cast<size_t>(take));
    }
  };
  rec(0);
  return out;
}

/// Visits every m-tuple (λ^1, ..., λ^m) of sub-multisets whose union is
/// contained in μ. Equal entries of μ are indistinguishable, so each tuple is
/// produced once: per distinct value the counts form a weak composition.
inline void for_each_splitting(const Partition& mu, int m,
                               const std::function<void(const std::vector<Partition>&)>& visit) {
  if (m < 1) throw Error(ErrorKind::InvalidArguments, "splittings need m >= 1");
  auto mult = mu.multiplicities();
  std::vector<std::pair<int, int>> values(mult.rbegin(), mult.rend());
  std::vector<std::vector<int>> slots(static_cast<size_t>(m));

  std::function<void(size_t)> per_value;
  std::function<void(size_t, size_t, int)> distribute = [&](size_t vi, size_t slot, int left) {
    if (slot == slots.size()) {
      per_value(vi + 1);
      return;
    }
    for (int take = 0; take <= left; ++take) {
      slots[slot].insert(slots[slot].end(), static_cast<size_t>(take), values[vi].first);
      distribute(vi, slot + 1, left - take);
      slots[slot].resize(slots[slot].size() - static_cast<size_t>(take));
    }
  };
  per_value = [&](size_t vi) {
    if (vi == values.size()) {
      std::vector<Partition> tuple;
      tuple.reserve(slots.size());
      for (const auto& s : slots) tuple.emplace_back(s);
      visit(tuple);
      return;
    }
    distribute(vi, 0, values[vi].second);
  };
  per_value(0);
}

inline std::vector<std::vector<Partition>> splittings(const Partition& mu, int m) {
  std::vector<std::vector<Partition>> out;
  for_each_splitting(mu, m, [&](const std::vector<Partition>& t) { out.push_back(t); });
  return out;
}

/// Unordered partitions of n, reverse-lexicographic: (3), (2,1), (1,1,1).
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArguments, "partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(left, cap); part >= 1; --part) {
      current.push_back(part);
      rec(left - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline std::string to_string(const Partition& p) {
  if (p.empty()) return "∅";
  std::string out;
  for (size_t i = 0; i < p.entries().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.entries()[i]);
  }
  return out;
}

/// "1,1,2"; "" or "∅" is the empty partition. Parentheses are tolerated.
inline Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')') s += c;
  if (s.empty() || s == "∅") return {};
  std::vector<int> entries;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorKind::Parse, "bad partition entry '" + item + "' in \"" + std::string(text) + "\"");
    int v = std::stoi(item);
    if (v < 1) throw Error(ErrorKind::Parse, "partition entries must be positive");
    entries.push_back(v);
  }
  return Partition(std::move(entries));
}

}  // namespace refloor
