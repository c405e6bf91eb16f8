#pragma once

#include <string>
#include <vector>

#include "taured/enumerate.hpp"
#include "taured/reduction.hpp"

namespace taured {

struct DotStyle {
  std::vector<bool> double_border;  // per vertex; shorter vectors mean false
  std::vector<bool> highlight;      // per vertex, drawn red
  bool ascii = false;               // "+" for the direct-sum sign
};

/// A DOT digraph with nodes n0, n1, ... in vertex order and edges in arrow order.
std::string emit_dot(const PosetQuiver& h, const DotStyle& style = {});

/// Replaces the non-ASCII signs used in labels ("⊕", "⁺").
std::string ascii_label(const std::string& label);

/// {algebra, indecomposables, stpairs, hasse}. `pairs` are renumbered in the
/// given order and the Hasse edges refer to those ids.
std::string emit_json(const std::string& algebra, const Inventory& inv, const std::vector<STPair>& pairs,
                      const PosetQuiver& h);

/// Plain table of the pairs with their summands, support and tilting flag.
std::string emit_table(const std::string& algebra, const Inventory& inv, const std::vector<STPair>& pairs);

/// Fixed-width rendering of a reduction report, one line per check.
std::string emit_report(const Report& r);

/// Series rows: n, count, recurrence, closed form, N2 shape.
std::string emit_series(const SeriesTable& t, bool closed_form);

}  // namespace taured
