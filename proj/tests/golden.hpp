#pragma once

#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "taured/enumerate.hpp"

namespace golden {

using EdgeSet = std::set<std::pair<std::string, std::string>>;

inline std::string path(const std::string& file) { return std::string(TAURED_GOLDEN_DIR) + "/" + file; }

inline std::string read_text(const std::string& file) {
  std::ifstream in(path(file));
  if (!in) throw std::runtime_error("missing golden file " + file);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Lines "src -> tgt"; '#' starts a comment line.
inline EdgeSet read_edges(const std::string& file) {
  std::ifstream in(path(file));
  if (!in) throw std::runtime_error("missing golden file " + file);
  EdgeSet out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto arrow = line.find(" -> ");
    out.emplace(line.substr(0, arrow), line.substr(arrow + 4));
  }
  return out;
}

inline EdgeSet edges_of(const taured::PosetQuiver& h) {
  EdgeSet out;
  for (const auto& [s, t] : h.arrows) out.emplace(h.labels[s], h.labels[t]);
  return out;
}

}  // namespace golden
