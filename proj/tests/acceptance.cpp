// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "refloor/refloor.hpp"

using namespace refloor;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Ledger {
 public:
  void fail(const std::string& why) {
    if (failures_++ < 5) std::cerr << "    " << why << "\n";
    pass_ = false;
  }
  bool pass() const { return pass_; }
  int failures() const { return failures_; }

 private:
  bool pass_ = true;
  int failures_ = 0;
};

MarkingSpec spec_of(const CHKey& k) { return {k.d, k.genus, k.mu1, k.mu2}; }

/// Every class with k points, 1 <= d.L <= 3, b sorted descending and d.E >= 0.
std::vector<CurveClass> sweep_classes(int k) {
  std::vector<CurveClass> out;
  for (int a = 1; a <= 3; ++a) {
    std::vector<int> b;
    std::function<void(int, int, int)> gen = [&](int i, int cap, int left) {
      if (i == k) {
        out.emplace_back(a, b);
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
  return out;
}

std::vector<CHKey> sweep_keys() {
  std::vector<CHKey> keys;
  for (int k = 0; k <= 6; ++k)
    for (const auto& d : sweep_classes(k))
      for (int g = 0; g <= 1; ++g)
        for (int s1 = 0; s1 <= d.dot_E(); ++s1)
          for (const auto& mu1 : partitions_of(s1))
            for (const auto& mu2 : partitions_of(d.dot_E() - s1)) keys.push_back({d, g, mu1, mu2});
  return keys;
}

/// A few keys whose b is not sorted, to exercise the symmetric memo keys.
std::vector<CHKey> permuted_keys() {
  return {
      {CurveClass(3, {0, 2, 0, 1, 0, 1}), 0, {}, {1, 1}},
      {CurveClass(3, {1, 0, 0, 2}), 1, {1}, {1, 1}},
      {CurveClass(2, {0, 1, 0, 1, 0}), 0, {1}, {1}},
      {CurveClass(3, {0, 0, 3, 1, 0, 0}), 0, {2}, {}},
      {CurveClass(2, {0, 0, 0, 0, 0, 1}), 1, {}, {1, 2}},
  };
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int n, const std::string& title, bool pass, const std::string& detail, double secs) {
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << secs;
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << n << ": " << title << " -- " << detail << " [" << t.str()
            << " s]" << std::endl;
}

HalfLaurent P(const std::string& s) { return parse_half_laurent(s); }

}  // namespace

int main() {
  bool all = true;
  auto run = [&](int n, const std::string& title, const std::function<std::string(Ledger&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Ledger ledger;
    std::string detail;
    try {
      detail = body(ledger);
    } catch (const std::exception& e) {
      ledger.fail(std::string("exception: ") + e.what());
      detail = std::string("aborted: ") + e.what();
    }
    report(n, title, ledger.pass(), detail, seconds_since(t0));
    all = all && ledger.pass();
  };

  run(1, "small-degree golden values, enumeration and recursion", [](Ledger& l) {
    Recursion rec;
    int n = 0;
    for (const auto& g : golden::small_degree()) {
      const HalfLaurent want = P(g.expected);
      const HalfLaurent e = count_refined(spec_of(g.key));
      const HalfLaurent c = rec.count(g.key);
      if (e != want) l.fail("enumerate " + key_string(g.key) + " = " + to_quantum_basis_string(e));
      if (c != want) l.fail("recurse " + key_string(g.key) + " = " + to_quantum_basis_string(c));
      ++n;
    }
    return std::to_string(n) + " values, both methods";
  });

  run(2, "genus-0 quartic values by recursion, cold cache", [](Ledger& l) {
    Recursion rec;  // private in-memory store, never read from disk
    for (const auto& g : golden::quartic_values()) {
      const HalfLaurent c = rec.count(g.key);
      if (c != P(g.expected)) l.fail(key_string(g.key) + " = " + to_quantum_basis_string(c));
    }
    return std::to_string(rec.stats().nodes.load()) + " recursion nodes";
  });

  HalfLaurent quartic_total;
  run(3, "quartic marked floor diagrams by enumeration", [&](Ledger& l) {
    const CountReport r = report(spec_of(golden::quartic_values()[2].key));
    std::map<std::string, int> got, want;
    for (const auto& item : r.items) ++got[to_string(item.contribution_refined)];
    for (const auto& f : golden::quartic_diagram_factors()) ++want[to_string(P(f))];
    if (got != want) l.fail("per-diagram contributions differ from the published factors");
    for (const auto& item : r.items)
      if (!validate_marking(item.representative, r.spec).empty()) l.fail("invalid representative: " + item.description);
    if (r.total_refined != P(golden::quartic_values()[2].expected)) l.fail("total " + to_quantum_basis_string(r.total_refined));
    quartic_total = r.total_refined;
    return std::to_string(r.items.size()) + " items, total " + to_quantum_basis_string(r.total_refined);
  });

  run(4, "value at q = 1", [&](Ledger& l) {
    const Rational v = eval_q1(quartic_total);
    const Rational c = count_complex(spec_of(golden::quartic_values()[2].key));
    if (v != 616) l.fail("eval_q1 = " + v.get_str());
    if (c != 616) l.fail("count_complex = " + c.get_str());
    return "eval_q1 = " + v.get_str() + ", count_complex = " + c.get_str();
  });

  // Shared by criteria 5 to 7.
  Recursion sweep_rec;
  std::vector<CHKey> keys = sweep_keys();
  std::vector<HalfLaurent> values(keys.size());

  run(5, "cross-method sweep k <= 6, d.L <= 3, g' <= 1", [&](Ledger& l) {
    for (size_t i = 0; i < keys.size(); ++i) {
      const HalfLaurent e = count_refined(spec_of(keys[i]));
      values[i] = sweep_rec.count(keys[i]);
      if (e != values[i])
        l.fail(key_string(keys[i]) + ": enumerate " + to_quantum_basis_string(e) + ", recurse " +
               to_quantum_basis_string(values[i]));
    }
    const auto extra = permuted_keys();
    for (const auto& key : extra) {
      const HalfLaurent e = count_refined(spec_of(key));
      Recursion fresh;
      if (e != sweep_rec.count(key) || e != fresh.count(key)) l.fail("permuted " + to_string(key.d));
    }
    return std::to_string(keys.size()) + " keys plus " + std::to_string(extra.size()) + " permuted, " +
           std::to_string(l.failures()) + " mismatches";
  });

  run(6, "structural invariants", [&](Ledger& l) {
    size_t nonzero = 0;
    for (size_t i = 0; i < keys.size(); ++i) {
      if (!is_palindromic(values[i])) l.fail("not palindromic: " + key_string(keys[i]));
      if (!values[i].is_zero()) ++nonzero;
    }
    const CurveClass L2 = golden::x6(2, {});
    auto N = [&](const Partition& a, const Partition& b) { return sweep_rec.count({L2, 0, a, b}); };
    // derivation chains for the conic of type (∅,(1,1,2))
    const HalfLaurent step1 = N({2}, {1, 1}) * Rational(2) + N({1}, {1, 2});
    const HalfLaurent step2 = N({1, 2}, {1}) * Rational(4) + N({1, 1}, {2});
    if (N({}, {1, 1, 2}) != step1) l.fail("first step of the conic chain");
    if (step1 != step2) l.fail("second step of the conic chain");
    if (step2 != N({1, 1, 2}, {}) * Rational(6)) l.fail("third step of the conic chain");
    // quartic chain: each value minus the one with a single free tangency fixed
    const auto& q = golden::quartic_values();
    const HalfLaurent d1 = sweep_rec.count(q[1].key) - sweep_rec.count(q[0].key);
    const HalfLaurent d2 = sweep_rec.count(q[2].key) - sweep_rec.count(q[1].key);
    if (d1 != P("2[3]_q^2+20[2]_q^2+84")) l.fail("quartic chain (1)|(1): " + to_quantum_basis_string(d1));
    if (d2 != P("3[2]_q^2+30")) l.fail("quartic chain (∅)|(1,1): " + to_quantum_basis_string(d2));
    const auto& s = sweep_rec.stats();
    if (s.slot_checks.load() != s.splittings.load() || s.fiber_checks.load() != s.splittings.load())
      l.fail("identity checks skipped on some splittings");
    return std::to_string(keys.size()) + " palindromic values (" + std::to_string(nonzero) + " nonzero); " +
           std::to_string(s.splittings.load()) + " splittings, " + std::to_string(s.slot_checks.load()) +
           " slot and " + std::to_string(s.fiber_checks.load()) + " fiber identities, " +
           std::to_string(s.descent_checks.load()) + " descent checks, 0 violations";
  });

  run(7, "BPS layer", [&](Ledger& l) {
    size_t relative = 0, surfaces = 0;
    for (size_t i = 0; i < keys.size(); ++i) {
      try {
        relative_bps(keys[i], values[i]);
        ++relative;
      } catch (const Error& e) {
        l.fail("relative " + key_string(keys[i]) + ": " + e.what());
      }
    }
    auto integral = [&](const std::string& what, const std::function<HalfLaurent()>& f) {
      try {
        const HalfLaurent p = f();
        if (!p.has_integer_powers() || !p.has_integer_coefficients()) l.fail(what + " = " + to_string(p));
        ++surfaces;
      } catch (const Error& e) {
        l.fail(what + ": " + e.what());
      }
    };
    for (int k = 0; k <= 5; ++k)
      for (const auto& d : sweep_classes(k))
        for (int g = 0; g <= 1; ++g)
          if (d.c1_dot() + g - 1 >= 0)
            integral("del Pezzo " + to_string(d) + " g" + std::to_string(g), [&] { return bps_delpezzo_high(d, g); });
    for (const auto& d : sweep_classes(6))
      for (int g = 0; g <= 1; ++g) integral("cubic " + to_string(d) + " g" + std::to_string(g), [&] { return bps_cubic(d, g); });

    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> deg(0, 8), coef(-1000, 1000);
    int round_trips = 0;
    for (int n = 0; n < 1000; ++n) {
      std::vector<HalfLaurent::Term> t;
      const int top = deg(rng);
      for (int j = 0; j <= top; ++j) {
        const Rational c = coef(rng);
        t.emplace_back(2 * j, c);
        if (j) t.emplace_back(-2 * j, c);
      }
      const HalfLaurent p = HalfLaurent::from_terms(t);
      if (recompose(decompose_bps(p, 0)) == p)
        ++round_trips;
      else
        l.fail("decompose round trip: " + to_string(p));
    }
    return std::to_string(relative) + " relative quotients exact, " + std::to_string(surfaces) +
           " surface polynomials integral, " + std::to_string(round_trips) + "/1000 round trips";
  });

  return all ? 0 : 1;
}
