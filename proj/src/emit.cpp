#include "taured/emit.hpp"

#include <sstream>

#include "json.hpp"

namespace taured {

namespace {

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size()))
    s.replace(at, from.size(), to);
  return s;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Code points, which is what a terminal shows for these labels.
std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return s + std::string(width > w ? width - w : 0, ' ');
}

std::string render(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (widths.size() <= i) widths.push_back(0);
      widths[i] = std::max(widths[i], display_width(r[i]));
    }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) line += i + 1 < r.size() ? pad(r[i], widths[i] + 2) : r[i];
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
  }
  return out.str();
}

bool flag(const std::vector<bool>& v, std::size_t i) { return i < v.size() && v[i]; }

}  // namespace

std::string ascii_label(const std::string& label) { return replace_all(replace_all(label, "⊕", "+"), "⁺", "^+"); }

std::string emit_dot(const PosetQuiver& h, const DotStyle& style) {
  std::ostringstream out;
  out << "digraph {\n";
  for (std::size_t i = 0; i < h.size(); ++i) {
    out << "  n" << i << " [label=" << dot_quote(style.ascii ? ascii_label(h.labels[i]) : h.labels[i]);
    if (flag(style.double_border, i)) out << ", peripheries=2";
    if (flag(style.highlight, i)) out << ", color=red, fontcolor=red";
    out << "];\n";
  }
  for (const auto& [s, t] : h.arrows) out << "  n" << s << " -> n" << t << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_json(const std::string& algebra, const Inventory& inv, const std::vector<STPair>& pairs,
                      const PosetQuiver& h) {
  using json = nlohmann::ordered_json;
  const Quiver& q = inv.algebra()->quiver();
  json doc;
  doc["algebra"] = algebra;
  doc["indecomposables"] = json::array();
  for (const auto& r : inv.records())
    doc["indecomposables"].push_back({{"id", r.id}, {"name", r.name}, {"dim_vector", r.module.dims()}});
  doc["stpairs"] = json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    json support = json::array();
    for (auto v : pairs[i].support) support.push_back(q.vertex_label(v));
    doc["stpairs"].push_back({{"id", i},
                              {"module_summands", pairs[i].modules},
                              {"support_vertices", support},
                              {"is_tau_tilting", pairs[i].is_tau_tilting}});
  }
  json edges = json::array();
  for (const auto& [s, t] : h.arrows) edges.push_back({s, t});
  doc["hasse"] = {{"edges", edges}};
  return doc.dump(2) + "\n";
}

std::string emit_table(const std::string& algebra, const Inventory& inv, const std::vector<STPair>& pairs) {
  const Quiver& q = inv.algebra()->quiver();
  std::size_t tilting = 0;
  for (const auto& p : pairs) tilting += p.is_tau_tilting;
  std::ostringstream out;
  out << "algebra " << algebra << ": " << inv.size() << " indecomposables, " << pairs.size() << " pairs, " << tilting
      << " tau-tilting\n";
  std::vector<std::vector<std::string>> rows{{"id", "modules", "support", "tau-tilting"}};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::string support;
    for (auto v : pairs[i].support) support += (support.empty() ? "" : " ") + q.vertex_label(v);
    rows.push_back({std::to_string(i), pair_label(inv, pairs[i]), support.empty() ? "-" : support,
                    pairs[i].is_tau_tilting ? "yes" : "no"});
  }
  return out.str() + render(rows);
}

std::string emit_report(const Report& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.checks) rows.push_back({c.pass ? "PASS" : "FAIL", c.name, c.witness});
  std::ostringstream out;
  out << "algebra " << r.algebra << ": " << (r.passed() ? "all checks pass" : "check failed") << "\n"
      << render(rows);
  return out.str();
}

std::string emit_series(const SeriesTable& t, bool closed_form) {
  auto yes_no = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "NO") : "-"; };
  std::vector<std::string> header{"n", "count", "recurrence"};
  if (closed_form) header.push_back("closed form");
  header.push_back("N2 shape");
  std::vector<std::vector<std::string>> rows{header};
  for (const auto& r : t.rows) {
    std::vector<std::string> row{std::to_string(r.n), std::to_string(r.count), yes_no(r.recurrence)};
    if (closed_form) row.push_back(r.closed.get_str() + (r.closed == r.count ? "" : " (differs)"));
    row.push_back(yes_no(r.n2_structure));
    rows.push_back(std::move(row));
  }
  return std::string("series ") + series_letter(t.kind) + "\n" + render(rows);
}

}  // namespace taured
