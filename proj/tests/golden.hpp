#pragma once

// Published refined counts on X'_6 used as golden values.

#include <string>
#include <vector>

#include "refloor/refloor.hpp"

namespace golden {

using namespace refloor;

struct Value {
  CHKey key;
  std::string expected;  // expression in quantum integers
};

inline CurveClass x6(int a, std::vector<int> b) {
  b.resize(6, 0);
  return CurveClass(a, b);
}

/// Degree ≤ 2 values, with E_i, E_j, E_k taken as E_1, E_2, E_3.
inline std::vector<Value> small_degree() {
  const CurveClass L = x6(1, {}), L2 = x6(2, {}), L2_1 = x6(2, {1}), L2_12 = x6(2, {1, 1}), L2_123 = x6(2, {1, 1, 1}),
                   L_1 = x6(1, {1});
  return {
      {{L2, 0, {}, {1, 1, 2}}, "3[2]_q"},   {{L, 0, {}, {1, 1}}, "1"},         {{L2_1, 0, {}, {1, 1, 1}}, "1"},
      {{L2, 0, {1}, {1, 2}}, "2[2]_q"},     {{L2, 0, {}, {1, 3}}, "2[3]_q"},   {{L, 0, {1}, {1}}, "1"},
      {{L2_1, 0, {}, {1, 2}}, "2[2]_q"},    {{L2_1, 0, {1}, {1, 1}}, "1"},     {{L2_12, 0, {}, {1, 1}}, "1"},
      {{L2, 0, {1, 1}, {2}}, "[2]_q"},      {{L2, 0, {1}, {3}}, "[3]_q"},      {{L2, 0, {}, {4}}, "[4]_q"},
      {{L, 0, {}, {2}}, "[2]_q"},           {{L2_1, 0, {1, 1}, {1}}, "1"},     {{L2_1, 0, {1}, {2}}, "[2]_q"},
      {{L2_1, 0, {}, {3}}, "[3]_q"},        {{L_1, 0, {}, {1}}, "1"},          {{L2_12, 0, {1}, {1}}, "1"},
      {{L2_12, 0, {}, {2}}, "[2]_q"},       {{L2_123, 0, {}, {1}}, "1"},
  };
}

inline CurveClass quartic() { return x6(4, {1, 1, 1, 1, 1, 1}); }

/// Genus-0 quartic values.
inline std::vector<Value> quartic_values() {
  return {
      {{quartic(), 0, {1, 1}, {}}, "[2]_q^4+[4]_q^2+8[3]_q^2+44[2]_q^2+112"},
      {{quartic(), 0, {1}, {1}}, "[2]_q^4+[4]_q^2+10[3]_q^2+64[2]_q^2+196"},
      {{quartic(), 0, {}, {1, 1}}, "[2]_q^4+[4]_q^2+10[3]_q^2+67[2]_q^2+226"},
  };
}

/// Per-diagram contributions for the quartic of type (∅,(1,1)).
inline std::vector<std::string> quartic_diagram_factors() {
  return {"[4]_q^2",     "6[3]_q^2", "15[2]_q^2", "20", "4[3]_q^2", "24[2]_q^2", "60", "6[2]_q^2",
          "36",          "[2]_q^4",  "12[2]_q^2", "30", "10[2]_q^2", "60",       "20"};
}

}  // namespace golden
