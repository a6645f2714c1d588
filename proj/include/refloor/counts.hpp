#pragma once

#include <string>
#include <vector>

#include "refloor/diagrams.hpp"
#include "refloor/markings.hpp"

namespace refloor {

/// One diagram together with one orbit of leaf roles.
struct CountItem {
  std::string diagram;      // canonical_form of the underlying diagram
  std::string description;  // floors, leaf roles and inner edges
  Integer classes = 0;
  HalfLaurent mult_refined;
  Rational mult_complex;
  HalfLaurent contribution_refined;
  Rational contribution_complex;
  MarkedDiagram representative;
};

struct CountReport {
  MarkingSpec spec;
  std::vector<CountItem> items;
  HalfLaurent total_refined;
  Rational total_complex;
};

/// Classes l·[E_i] carry no floor diagrams; the recursion owns their value.
inline bool is_exceptional_count_key(const MarkingSpec& spec) { return spec.d.is_exceptional().has_value(); }

inline CountReport report(const MarkingSpec& spec) {
  CountReport r;
  r.spec = spec;
  if (is_exceptional_count_key(spec)) return r;
  require_valid_spec(spec);

  std::vector<int> leaves = spec.mu1.entries();
  leaves.insert(leaves.end(), spec.mu2.entries().begin(), spec.mu2.entries().end());
  leaves.insert(leaves.end(), static_cast<size_t>(spec.d.b_sum()), 1);

  for (const auto& layout : generate_layouts(spec.d.dot_L(), spec.genus, Partition(leaves))) {
    const auto found = enumerate_markings(layout, spec);
    if (found.groups.empty()) continue;
    const std::string form = canonical_form(to_diagram(layout.layout));
    for (const auto& g : found.groups) {
      CountItem item;
      item.diagram = form;
      item.description = g.description;
      item.classes = g.classes;
      item.mult_refined = g.mult_refined;
      item.mult_complex = g.mult_complex;
      item.contribution_refined = g.mult_refined * Rational(g.classes);
      item.contribution_complex = g.mult_complex * g.classes;
      item.representative = g.representative;
      r.total_refined += item.contribution_refined;
      r.total_complex += item.contribution_complex;
      r.items.push_back(std::move(item));
    }
  }
  return r;
}

inline HalfLaurent count_refined(const MarkingSpec& spec) { return report(spec).total_refined; }

inline Rational count_complex(const MarkingSpec& spec) { return report(spec).total_complex; }

}  // namespace refloor
