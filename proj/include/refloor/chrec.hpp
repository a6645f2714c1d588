#pragma once

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "refloor/classes.hpp"
#include "refloor/error.hpp"
#include "refloor/io.hpp"
#include "refloor/partitions.hpp"
#include "refloor/qalgebra.hpp"

namespace refloor {

/// Arguments (d, g', μ1, μ2) of a refined count; k is the length of d.b().
struct CHKey {
  CurveClass d;
  int genus = 0;
  Partition mu1;
  Partition mu2;

  CHKey canonical() const { return {d.canonical_key(), genus, mu1.canonical(), mu2.canonical()}; }

  friend bool operator==(const CHKey&, const CHKey&) = default;
  friend bool operator<(const CHKey& x, const CHKey& y) {
    return std::tie(x.d, x.genus, x.mu1, x.mu2) < std::tie(y.d, y.genus, y.mu1, y.mu2);
  }
};

/// "6|4;1,1,1,1,1,1|0|1,1|" for the canonical form of the key.
inline std::string key_string(const CHKey& key) {
  const CHKey c = key.canonical();
  auto plain = [](const Partition& p) { return p.empty() ? std::string() : to_string(p); };
  return std::to_string(c.d.k()) + "|" + to_string(c.d) + "|" + std::to_string(c.genus) + "|" + plain(c.mu1) + "|" +
         plain(c.mu2);
}

struct SplitPart {
  CurveClass d;
  int genus = 0;
  Partition mu1;  // sorted descending
  Partition mu2;  // sorted descending, contains xi
  Partition xi;   // sorted descending, nonempty

  int slots() const { return d.dot_L() + genus - 1 + mu2.length(); }

  friend bool operator==(const SplitPart&, const SplitPart&) = default;
  friend bool operator<(const SplitPart& x, const SplitPart& y) {
    return std::tie(x.d, x.genus, x.mu1, x.mu2, x.xi) < std::tie(y.d, y.genus, y.mu1, y.mu2, y.xi);
  }
};

/// One term of the degeneration sum. Parts are sorted; equal parts are adjacent.
struct Splitting {
  std::vector<SplitPart> parts;
  Partition eta;
  Integer sigma = 1;

  Partition xi() const {
    std::vector<int> all;
    for (const auto& p : parts) all.insert(all.end(), p.xi.entries().begin(), p.xi.entries().end());
    return Partition(std::move(all)).canonical();
  }
};

inline std::string describe(const Splitting& s) {
  std::string out;
  for (const auto& p : s.parts) {
    if (!out.empty()) out += " + ";
    out += "[" + to_string(p.d) + " g" + std::to_string(p.genus) + " (" + to_string(p.mu1) + "|" + to_string(p.mu2) +
           ") xi " + to_string(p.xi) + "]";
  }
  return out + " eta " + to_string(s.eta) + " sigma " + s.sigma.get_str();
}

/// Every reason the key is outside the recursion's domain; empty when usable.
inline std::vector<std::string> key_problems(const CHKey& key) {
  std::vector<std::string> out;
  if (key.genus < 0) out.push_back("genus must be non-negative");
  if (key.d.dot_L() < 0) out.push_back("d.L must be non-negative");
  if (!key.d.is_exceptional()) {
    for (int i = 1; i <= key.d.k(); ++i)
      if (key.d.dot_Ei(i) < 0) out.push_back("d.E_" + std::to_string(i) + " is negative");
    if (key.d.dot_E() < 0) out.push_back("d.E is negative");
  }
  if (key.mu1.size() + key.mu2.size() != key.d.dot_E())
    out.push_back("|mu1| + |mu2| = " + std::to_string(key.mu1.size() + key.mu2.size()) + " but d.E = " +
                  std::to_string(key.d.dot_E()));
  return out;
}

inline void require_valid_key(const CHKey& key) {
  auto problems = key_problems(key);
  if (problems.empty()) return;
  std::string msg;
  for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
  throw Error(ErrorKind::SpecInvalid, msg);
}

/// Visits each splitting of the key exactly once (parts taken up to order).
inline void for_each_splitting(const CHKey& key, const std::function<void(const Splitting&)>& visit) {
  const int k = key.d.k();
  const int a_rest = key.d.dot_L() - 2;
  const int g = key.genus;
  if (a_rest < 0) return;

  const auto mu1_subs = sub_multisets(key.mu1);
  const auto mu2_subs = sub_multisets(key.mu2);

  for (unsigned S = 0; S < (1U << k); ++S) {
    std::vector<int> b_rest(static_cast<size_t>(k));
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      b_rest[static_cast<size_t>(i)] = key.d.b()[static_cast<size_t>(i)] - 1 + ((S >> i) & 1U ? 1 : 0);
      if (b_rest[static_cast<size_t>(i)] < 0) ok = false;
    }
    if (!ok) continue;
    // with d.L = 2 only exceptional parts fit; when d = [E] this includes m = 0
    if (a_rest == 0 && std::any_of(b_rest.begin(), b_rest.end(), [](int x) { return x != 0; })) continue;

    std::vector<SplitPart> fixed;
    for (int i = 0; i < k; ++i)
      if ((S >> i) & 1U) fixed.push_back({CurveClass::exceptional(k, i + 1), 0, {}, {1}, {1}});

    // candidate non-exceptional parts
    std::vector<SplitPart> candidates;
    std::vector<int> bj(static_cast<size_t>(k), 0);
    std::function<void(int)> choose_b = [&](int i) {
      if (i < k) {
        for (int v = 0; v <= b_rest[static_cast<size_t>(i)]; ++v) {
          bj[static_cast<size_t>(i)] = v;
          choose_b(i + 1);
        }
        bj[static_cast<size_t>(i)] = 0;
        return;
      }
      for (int aj = 1; aj <= a_rest; ++aj) {
        const CurveClass dj(aj, bj);
        const int e = dj.dot_E();
        if (e < 1) continue;
        for (int gj = 0; gj <= g; ++gj)
          for (const auto& m1 : mu1_subs)
            for (const auto& rho : mu2_subs) {
              const int left = e - m1.size() - rho.size();
              if (left < 1) continue;
              for (const auto& xi : partitions_of(left)) {
                if (xi.length() > g - gj + 1) continue;
                candidates.push_back({dj, gj, m1, union_of(rho, xi).canonical(), xi});
              }
            }
      }
    };
    choose_b(0);
    std::sort(candidates.begin(), candidates.end());

    auto mu1_left = key.mu1.multiplicities();
    auto mu2_left = key.mu2.multiplicities();
    std::vector<int> a_b_left = b_rest;
    int a_left = a_rest;
    int genus_left = g;
    std::vector<size_t> chosen;

    auto take = [](std::map<int, int>& pool, const Partition& p, int sign) {
      bool fits = true;
      for (const auto& [v, c] : p.multiplicities()) {
        pool[v] -= sign * c;
        if (pool[v] < 0) fits = false;
      }
      return fits;
    };

    std::function<void(size_t)> dfs = [&](size_t start) {
      if (a_left == 0) {
        if (std::any_of(a_b_left.begin(), a_b_left.end(), [](int x) { return x != 0; })) return;
        if (genus_left != 0) return;
        if (std::any_of(mu2_left.begin(), mu2_left.end(), [](const auto& kv) { return kv.second != 0; })) return;
        Splitting s;
        for (size_t idx : chosen) s.parts.push_back(candidates[idx]);
        s.parts.insert(s.parts.end(), fixed.begin(), fixed.end());
        std::sort(s.parts.begin(), s.parts.end());
        for (size_t i = 0; i < s.parts.size();) {
          size_t j = i;
          while (j < s.parts.size() && s.parts[j] == s.parts[i]) ++j;
          s.sigma *= factorial(static_cast<int>(j - i));
          i = j;
        }
        std::vector<int> eta;
        for (const auto& [v, c] : mu1_left) eta.insert(eta.end(), static_cast<size_t>(c), v);
        s.eta = Partition(std::move(eta)).canonical();
        visit(s);
        return;
      }
      for (size_t idx = start; idx < candidates.size(); ++idx) {
        const SplitPart& p = candidates[idx];
        if (p.d.dot_L() > a_left) continue;
        bool fits = true;
        for (int i = 0; i < k; ++i)
          if (p.d.b()[static_cast<size_t>(i)] > a_b_left[static_cast<size_t>(i)]) fits = false;
        const int cost = p.genus + p.xi.length() - 1;
        if (!fits || cost > genus_left) continue;
        const Partition rho = diff(p.mu2, p.xi);
        const bool ok1 = take(mu1_left, p.mu1, 1);
        const bool ok2 = take(mu2_left, rho, 1);
        if (ok1 && ok2) {
          a_left -= p.d.dot_L();
          for (int i = 0; i < k; ++i) a_b_left[static_cast<size_t>(i)] -= p.d.b()[static_cast<size_t>(i)];
          genus_left -= cost;
          chosen.push_back(idx);
          dfs(idx);
          chosen.pop_back();
          genus_left += cost;
          for (int i = 0; i < k; ++i) a_b_left[static_cast<size_t>(i)] += p.d.b()[static_cast<size_t>(i)];
          a_left += p.d.dot_L();
        }
        take(mu2_left, rho, -1);
        take(mu1_left, p.mu1, -1);
      }
    };
    dfs(0);
  }
}

inline std::vector<Splitting> enumerate_splittings(const CHKey& key) {
  std::vector<Splitting> out;
  for_each_splitting(key, [&](const Splitting& s) { out.push_back(s); });
  return out;
}

// ---------------------------------------------------------------------------
// Memo store with an optional JSON-lines file behind it
// ---------------------------------------------------------------------------

/// FNV-1a, 64 bit, as 16 hex digits.
inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string cache_checksum(const std::string& key, const HalfLaurent& value) {
  return fnv1a_hex(key + "\t" + to_json(value).dump());
}

class MemoStore {
 public:
  using Warn = std::function<void(const std::string&)>;

  MemoStore() = default;
  explicit MemoStore(std::filesystem::path path, bool read_only = false, Warn warn = default_warn())
      : path_(std::move(path)), read_only_(read_only), warn_(std::move(warn)) {
    load();
  }

  /// $REFINED_FLOOR_CACHE when set and non-empty.
  static std::optional<std::filesystem::path> environment_path() {
    const char* p = std::getenv("REFINED_FLOOR_CACHE");
    if (p && *p) return std::filesystem::path(p);
    return std::nullopt;
  }

  std::optional<HalfLaurent> get(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  void put(const std::string& key, const HalfLaurent& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = values_.emplace(key, value);
    if (!inserted) return;
    if (!path_ || read_only_) return;
    std::ofstream out(*path_, std::ios::app);
    out << record(key, value).dump() << '\n';
  }

  size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return values_.size();
  }

  size_t corrupt_lines() const noexcept { return corrupt_; }
  size_t loaded_lines() const noexcept { return loaded_; }
  const std::optional<std::filesystem::path>& path() const noexcept { return path_; }
  bool read_only() const noexcept { return read_only_; }

  /// Forgets every value and truncates the backing file.
  void clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    values_.clear();
    if (path_ && !read_only_) std::ofstream(*path_, std::ios::trunc);
  }

  /// Keys in sorted order, for inspection.
  std::vector<std::string> keys() const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<std::string> out;
    for (const auto& [k, v] : values_) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
  }

  static Json record(const std::string& key, const HalfLaurent& value) {
    return Json{{"key", key}, {"value", to_json(value)}, {"checksum", cache_checksum(key, value)}};
  }

  static Warn default_warn() {
    return [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };
  }

 private:
  void load() {
    std::ifstream in(*path_);
    if (!in) return;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        const Json j = Json::parse(line);
        const std::string key = j.at("key").get<std::string>();
        const HalfLaurent value = half_laurent_from_json(j.at("value"));
        if (j.at("checksum").get<std::string>() != cache_checksum(key, value))
          throw Error(ErrorKind::CacheCorrupt, "checksum mismatch");
        values_[key] = value;
        ++loaded_;
      } catch (const std::exception& e) {
        ++corrupt_;
        if (warn_) warn_(path_->string() + ":" + std::to_string(lineno) + ": skipping corrupt cache record (" + e.what() + ")");
      }
    }
  }

  std::optional<std::filesystem::path> path_;
  bool read_only_ = false;
  Warn warn_ = default_warn();
  mutable std::mutex mutex_;
  std::unordered_map<std::string, HalfLaurent> values_;
  size_t loaded_ = 0;
  size_t corrupt_ = 0;
};

// ---------------------------------------------------------------------------
// The recursion
// ---------------------------------------------------------------------------

struct RecursionStats {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> memo_hits{0};
  std::atomic<std::uint64_t> splittings{0};
  std::atomic<std::uint64_t> slot_checks{0};
  std::atomic<std::uint64_t> fiber_checks{0};
  std::atomic<std::uint64_t> descent_checks{0};
};

class Recursion {
 public:
  Recursion() : store_(&own_) {}
  explicit Recursion(MemoStore& store) : store_(&store) {}

  HalfLaurent count(const CHKey& key) {
    require_valid_key(key);
    return value(key.canonical());
  }

  const RecursionStats& stats() const noexcept { return stats_; }
  MemoStore& store() noexcept { return *store_; }

  /// Initial values: keys with n = d.L − 1 + g' + l(μ2) = 0 or d.L = 0.
  static HalfLaurent base_value(const CHKey& c) {
    if (auto ex = c.d.is_exceptional()) {
      const bool unit = ex->second == 1 && c.genus == 0 && c.mu1.empty() && c.mu2 == Partition{1};
      return unit ? HalfLaurent(1L) : HalfLaurent();
    }
    if (c.d.dot_L() != 1 || c.genus != 0 || !c.mu2.empty()) return {};
    const int b = c.d.b_sum();
    if (b == 0 && c.mu1 == Partition{2}) return quantum_integer(2) / Rational(2);
    if (b == 0 && c.mu1 == Partition{1, 1}) return HalfLaurent(1L);
    if (b == 1 && c.d.b().front() == 1 && c.mu1 == Partition{1}) return HalfLaurent(1L);
    // the line through two of the blown-up points; no recursive call reaches it
    if (b == 2 && c.d.b().front() == 1 && c.mu1.empty()) return HalfLaurent(1L);
    return {};
  }

 private:
  void check_descent(const CHKey& from, const CHKey& to) {
    ++stats_.descent_checks;
    const auto m0 = std::make_pair(from.d.dot_L(), from.mu2.length());
    const auto m1 = std::make_pair(to.d.dot_L(), to.mu2.length());
    if (!(m1 < m0))
      throw Error(ErrorKind::NonTermination, "recursive call " + key_string(to) + " from " + key_string(from) +
                                                 " does not decrease (d.L, l(mu2))");
  }

  HalfLaurent value(const CHKey& c) {
    const std::string ks = key_string(c);
    if (auto hit = store_->get(ks)) {
      ++stats_.memo_hits;
      return *hit;
    }
    ++stats_.nodes;
    HalfLaurent result = compute(c);
    store_->put(ks, result);
    return result;
  }

  HalfLaurent compute(const CHKey& c) {
    const int a = c.d.dot_L();
    const int n = a - 1 + c.genus + c.mu2.length();
    if (a == 0 || n == 0 || c.d.is_exceptional()) return base_value(c);

    HalfLaurent total;
    // trade a free tangency for a fixed one
    for (const auto& [w, cnt] : c.mu2.multiplicities()) {
      CHKey sub{c.d, c.genus, union_of(c.mu1, {w}).canonical(), diff(c.mu2, {w}).canonical()};
      check_descent(c, sub);
      HalfLaurent v = value(sub);
      if (!v.is_zero()) total += v * Rational(w);
    }

    const int slots = a + c.genus - 2 + c.mu2.length();
    const int k = c.d.k();
    for_each_splitting(c, [&](const Splitting& s) {
      ++stats_.splittings;
      std::vector<int> n_j;
      int slot_sum = 0;
      for (const auto& p : s.parts) {
        n_j.push_back(p.slots());
        slot_sum += p.slots();
      }
      ++stats_.slot_checks;
      if (slot_sum != slots)
        throw Error(ErrorKind::InvariantViolation, "slot identity fails for " + ks_of(c) + ": " + describe(s));
      ++stats_.fiber_checks;
      if (s.xi().size() - s.eta.size() != k - 4)
        throw Error(ErrorKind::InvariantViolation, "fiber identity fails for " + ks_of(c) + ": " + describe(s));

      HalfLaurent term(1L);
      for (const auto& p : s.parts) {
        CHKey sub{p.d, p.genus, p.mu1, p.mu2};
        check_descent(c, sub);
        HalfLaurent v = value(sub.canonical());
        if (v.is_zero()) return;
        term *= v;
      }
      Integer coeff = multinomial(slots, n_j);
      std::vector<Partition> mu1_parts;
      for (const auto& p : s.parts) {
        mu1_parts.push_back(p.mu1);
        coeff *= partition_binomial(p.mu2, {diff(p.mu2, p.xi)});
      }
      coeff *= partition_binomial(c.mu1, mu1_parts);
      Rational scale = make_rational(coeff, s.sigma);
      const Partition xi = s.xi();
      for (int x : xi.entries()) term *= quantum_integer(x);
      for (int y : s.eta.entries()) {
        term *= quantum_integer(y);
        scale /= y;
      }
      total += term * scale;
    });
    return total;
  }

  static std::string ks_of(const CHKey& c) { return key_string(c); }

  MemoStore own_;
  MemoStore* store_;
  RecursionStats stats_;
};

/// Refined count by the recursion, memoized in a process-wide store.
inline HalfLaurent ch_count(const CHKey& key) {
  static Recursion engine;
  return engine.count(key);
}

}  // namespace refloor
