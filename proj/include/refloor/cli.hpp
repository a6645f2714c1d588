#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "refloor/bps.hpp"
#include "refloor/chrec.hpp"
#include "refloor/classes.hpp"
#include "refloor/counts.hpp"
#include "refloor/io.hpp"
#include "refloor/partitions.hpp"

namespace refloor::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kBadFlags = 2,
  kSpecInvalid = 3,
  kMismatch = 4,
  kNotDivisible = 5,
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArguments:
    case ErrorKind::IndexOutOfRange: return kBadFlags;
    case ErrorKind::SpecInvalid: return kSpecInvalid;
    case ErrorKind::NotDivisible:
    case ErrorKind::IntegralityFailure:
    case ErrorKind::NotPolynomialInQ:
    case ErrorKind::NotPalindromic: return kNotDivisible;
    default: return kFailure;
  }
}

/// Inverse of key_string.
inline CHKey parse_key_string(const std::string& s) {
  std::vector<std::string> f;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '|')) f.push_back(item);
  if (!s.empty() && s.back() == '|') f.emplace_back();
  if (f.size() != 5) throw Error(ErrorKind::Parse, "cache key must have five '|' separated fields: " + s);
  CHKey key{parse_curve_class(f[1]), std::stoi(f[2]), parse_partition(f[3]), parse_partition(f[4])};
  if (key.d.k() != std::stoi(f[0])) throw Error(ErrorKind::Parse, "k disagrees with the class in key " + s);
  return key;
}

struct Options {
  int k = -1;
  std::string cls;
  int genus = 0;
  std::string mu1;
  std::string mu2;
  std::string method = "enumerate";
  std::string format = "text";
  std::string cache;
  bool read_only = false;
  unsigned jobs = 1;
  std::string kind = "relative";
  int max_degree = 2;
  int max_genus = 0;
  std::string action = "inspect";
};

/// Runs `work(i)` for i in [0, n) on up to `jobs` threads.
inline void parallel_for(size_t n, unsigned jobs, const std::function<void(size_t)>& work) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<size_t>(n, 1))));
  if (jobs == 1) {
    for (size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (size_t i; (i = next++) < n;) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Refined counts of floor diagrams relative to a conic"};
    app.require_subcommand(1);
    Options o;

    auto key_flags = [&](CLI::App* sub) {
      sub->add_option("--k", o.k, "number of blown-up points (checked against --class)")->check(CLI::Range(0, 6));
      sub->add_option("--class", o.cls, "curve class \"a;b1,...,bk\"")->required();
      sub->add_option("--genus", o.genus, "genus g'")->check(CLI::NonNegativeNumber);
      sub->add_option("--mu1", o.mu1, "fixed tangencies, e.g. \"1,1\"");
      sub->add_option("--mu2", o.mu2, "free tangencies, e.g. \"1,1,2\"");
    };
    auto common = [&](CLI::App* sub) {
      sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
      sub->add_option("--cache", o.cache, "JSON-lines cache file (default $REFINED_FLOOR_CACHE)");
      sub->add_flag("--read-only", o.read_only, "never write to the cache file");
      sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    };
    auto method_flag = [&](CLI::App* sub) {
      sub->add_option("--method", o.method, "enumerate, recurse or both")
          ->check(CLI::IsMember({"enumerate", "recurse", "both"}));
    };

    auto* count = app.add_subcommand("count", "direct enumeration with an itemized report");
    key_flags(count);
    common(count);
    method_flag(count);
    auto* recurse = app.add_subcommand("recurse", "value from the recursion");
    key_flags(recurse);
    common(recurse);
    auto* check = app.add_subcommand("check", "compare enumeration and recursion");
    key_flags(check);
    common(check);
    auto* bps = app.add_subcommand("bps", "relative, del Pezzo or cubic-surface BPS polynomials");
    key_flags(bps);
    common(bps);
    method_flag(bps);
    bps->add_option("--kind", o.kind, "relative, delpezzo or cubic")->check(CLI::IsMember({"relative", "delpezzo", "cubic"}));
    auto* table = app.add_subcommand("table", "JSON lines over every key up to a degree and genus");
    table->add_option("--k", o.k, "number of blown-up points")->required()->check(CLI::Range(0, 6));
    table->add_option("--max-degree", o.max_degree, "largest d.L")->check(CLI::PositiveNumber);
    table->add_option("--max-genus", o.max_genus, "largest g'")->check(CLI::NonNegativeNumber);
    common(table);
    method_flag(table);
    auto* cache = app.add_subcommand("cache", "inspect, verify or clear a cache file");
    cache->add_option("action", o.action, "inspect, verify or clear")->check(CLI::IsMember({"inspect", "verify", "clear"}));
    common(cache);

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) {
        out_ << app.help();
        return kOk;
      }
      err_ << e.what() << '\n';
      return kBadFlags;
    }

    try {
      if (*count) return do_count(o);
      if (*recurse) return do_recurse(o);
      if (*check) return do_check(o);
      if (*bps) return do_bps(o);
      if (*table) return do_table(o);
      if (*cache) return do_cache(o);
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return exit_code_for(e.kind());
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << '\n';
      return kFailure;
    }
    return kFailure;
  }

 private:
  CHKey key_from(const Options& o) const {
    CHKey key{parse_curve_class(o.cls), o.genus, parse_partition(o.mu1), parse_partition(o.mu2)};
    if (o.k >= 0 && o.k != key.d.k())
      throw Error(ErrorKind::InvalidArguments, "--k " + std::to_string(o.k) + " but the class lists " +
                                                   std::to_string(key.d.k()) + " exceptional coefficients");
    return key;
  }

  MemoStore& store(const Options& o) {
    if (!store_) {
      if (!o.cache.empty())
        store_.emplace(o.cache, o.read_only, [this](const std::string& m) { err_ << "warning: " << m << '\n'; });
      else if (auto env = MemoStore::environment_path())
        store_.emplace(*env, o.read_only, [this](const std::string& m) { err_ << "warning: " << m << '\n'; });
      else
        store_.emplace();
    }
    return *store_;
  }

  Recursion& recursion(const Options& o) {
    if (!recursion_) recursion_ = std::make_unique<Recursion>(store(o));
    return *recursion_;
  }

  static MarkingSpec spec_of(const CHKey& k) { return {k.d, k.genus, k.mu1, k.mu2}; }

  HalfLaurent enumerate(const CHKey& key) {
    MarkingSpec spec = spec_of(key);
    if (key.d.is_exceptional()) return {};
    require_valid_spec(spec);
    return count_refined(spec);
  }

  void print_value(const std::string& label, const HalfLaurent& v) {
    out_ << label << to_quantum_basis_string(v) << "\n";
    out_ << std::string(label.size(), ' ') << "= " << to_string(v) << "\n";
  }

  int do_count(const Options& o) {
    const CHKey key = key_from(o);
    if (o.method != "enumerate") return compare_or_single(o, key);
    const MarkingSpec spec = spec_of(key);
    if (!key.d.is_exceptional()) require_valid_spec(spec);
    const CountReport r = report(spec);
    if (o.format == "json") {
      out_ << to_json(r).dump(2) << "\n";
      return kOk;
    }
    out_ << "N_q^{(" << to_string(key.mu1) << "),(" << to_string(key.mu2) << ")}(X'_" << key.d.k() << ", "
         << to_string(key.d) << ", g'=" << key.genus << "): " << r.items.size() << " items\n";
    for (const auto& i : r.items)
      out_ << "  " << i.classes.get_str() << " x (" << to_quantum_basis_string(i.mult_refined) << ")   " << i.description
           << "\n";
    print_value("total: ", r.total_refined);
    out_ << "complex: " << r.total_complex.get_str() << "\n";
    return kOk;
  }

  int compare_or_single(const Options& o, const CHKey& key) {
    std::optional<HalfLaurent> e, c;
    if (o.method == "enumerate" || o.method == "both") e = enumerate(key);
    if (o.method == "recurse" || o.method == "both") c = recursion(o).count(key);
    return emit(o, key, e, c);
  }

  int emit(const Options& o, const CHKey& key, const std::optional<HalfLaurent>& e, const std::optional<HalfLaurent>& c) {
    const bool mismatch = e && c && *e != *c;
    if (o.format == "json") {
      Json j{{"key", key_string(key)}};
      if (e) j["enumerate"] = to_json(*e);
      if (c) j["recurse"] = to_json(*c);
      const HalfLaurent& v = e ? *e : *c;
      j["value"] = to_json(v);
      j["quantum"] = to_quantum_basis_string(v);
      if (e && c) j["agree"] = !mismatch;
      out_ << j.dump() << "\n";
    } else {
      if (e) print_value("enumerate: ", *e);
      if (c) print_value("recurse:   ", *c);
      if (e && c) out_ << (mismatch ? "MISMATCH\n" : "agree\n");
    }
    return mismatch ? kMismatch : kOk;
  }

  int do_recurse(const Options& o) {
    const CHKey key = key_from(o);
    const HalfLaurent v = recursion(o).count(key);
    if (o.format == "json") {
      out_ << Json{{"key", key_string(key)}, {"value", to_json(v)}, {"quantum", to_quantum_basis_string(v)}}.dump() << "\n";
    } else {
      out_ << to_quantum_basis_string(v) << "\n";
    }
    return kOk;
  }

  int do_check(const Options& o) {
    const CHKey key = key_from(o);
    return emit(o, key, enumerate(key), recursion(o).count(key));
  }

  int do_bps(const Options& o) {
    const CHKey key = key_from(o);
    HalfLaurent p;
    if (o.kind == "relative") {
      std::optional<HalfLaurent> e, c;
      if (o.method != "recurse") e = enumerate(key);
      if (o.method != "enumerate") c = recursion(o).count(key);
      if (e && c && *e != *c) {
        err_ << "enumeration and recursion disagree for " << key_string(key) << "\n";
        return kMismatch;
      }
      p = relative_bps(key, e ? *e : *c);
    } else if (o.kind == "delpezzo") {
      p = bps_delpezzo_high(key.d, key.genus);
    } else {
      p = bps_cubic(key.d, key.genus);
    }
    const auto b = decompose_bps(p, key.genus);
    if (o.format == "json") {
      out_ << to_json(b).dump() << "\n";
      return kOk;
    }
    print_value("polynomial: ", p);
    for (const auto& [j, c] : b.coefficients) out_ << "  n_g" << key.genus + j << " = " << c.get_str() << "\n";
    return kOk;
  }

  int do_table(const Options& o) {
    const int k = o.k;
    std::vector<CHKey> keys;
    for (int a = 1; a <= o.max_degree; ++a) {
      std::vector<int> b;
      std::function<void(int, int, int)> gen = [&](int i, int cap, int left) {
        if (i == k) {
          const CurveClass d(a, b);
          const int e = d.dot_E();
          for (int g = 0; g <= o.max_genus; ++g)
            for (int s1 = 0; s1 <= e; ++s1)
              for (const auto& m1 : partitions_of(s1))
                for (const auto& m2 : partitions_of(e - s1)) keys.push_back({d, g, m1, m2});
          return;
        }
        for (int v = std::min(cap, left); v >= 0; --v) {
          b.push_back(v);
          gen(i + 1, v, left - v);
          b.pop_back();
        }
      };
      gen(0, 2 * a, 2 * a);
    }
    if (o.method != "enumerate") recursion(o);
    std::vector<std::string> lines(keys.size());
    std::atomic<bool> mismatch{false};
    parallel_for(keys.size(), o.jobs, [&](size_t i) {
      const CHKey& key = keys[i];
      Json j{{"key", key_string(key)}};
      std::optional<HalfLaurent> e, c;
      if (o.method != "recurse") e = enumerate(key);
      if (o.method != "enumerate") c = recursion_->count(key);
      const HalfLaurent& v = e ? *e : *c;
      j["value"] = to_json(v);
      j["quantum"] = to_quantum_basis_string(v);
      if (e && c) {
        j["agree"] = *e == *c;
        if (*e != *c) mismatch = true;
      }
      lines[i] = j.dump();
    });
    for (const auto& l : lines) out_ << l << "\n";
    return mismatch ? kMismatch : kOk;
  }

  int do_cache(const Options& o) {
    if (o.cache.empty() && !MemoStore::environment_path())
      throw Error(ErrorKind::InvalidArguments, "cache needs --cache or REFINED_FLOOR_CACHE");
    MemoStore& s = store(o);
    if (o.action == "clear") {
      if (s.read_only()) throw Error(ErrorKind::InvalidArguments, "cannot clear a read-only cache");
      const size_t n = s.size();
      s.clear();
      out_ << "cleared " << n << " entries\n";
      return kOk;
    }
    if (o.action == "inspect") {
      if (o.format == "json") {
        out_ << Json{{"path", s.path()->string()}, {"entries", s.size()}, {"corrupt", s.corrupt_lines()}}.dump() << "\n";
      } else {
        out_ << s.path()->string() << ": " << s.size() << " entries, " << s.corrupt_lines() << " corrupt lines\n";
        for (const auto& k : s.keys()) out_ << "  " << k << " = " << to_quantum_basis_string(*s.get(k)) << "\n";
      }
      return kOk;
    }
    // verify: recompute each entry with a fresh in-memory recursion
    Recursion fresh;
    size_t bad = 0;
    for (const auto& k : s.keys()) {
      const HalfLaurent v = fresh.count(parse_key_string(k));
      if (v != *s.get(k)) {
        ++bad;
        out_ << "stale: " << k << "\n";
      }
    }
    out_ << s.size() << " entries checked, " << bad << " differ, " << s.corrupt_lines() << " corrupt lines skipped\n";
    return bad ? kMismatch : kOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  std::optional<MemoStore> store_;
  std::unique_ptr<Recursion> recursion_;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return Runner(out, err).run(argc, argv);
}

}  // namespace refloor::cli
