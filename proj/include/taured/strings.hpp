#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "taured/algebra.hpp"
#include "taured/representation.hpp"

namespace taured {

/// A letter of a string: an arrow read forwards or as its formal inverse.
struct Letter {
  std::size_t arrow = 0;
  bool inverse = false;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A walk in the quiver. `start` is the first vertex visited; for the trivial
/// string it is the only one.
struct StringWord {
  std::size_t start = 0;
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const StringWord&, const StringWord&) = default;
};

struct StringAlgebraCheck {
  bool ok = true;
  std::string reason;  // first violated condition when !ok
};

StringAlgebraCheck is_string_algebra(const Algebra& a);

/// Vertices visited by the walk, length() + 1 entries. Throws
/// Error(InvalidRelation) when two letters do not compose.
std::vector<std::size_t> string_vertices(const Quiver& q, const StringWord& w);
StringWord inverse_word(const Quiver& q, const StringWord& w);
/// The smaller of the word and its inverse.
StringWord canonical_word(const Quiver& q, const StringWord& w);
/// Composable, reduced, and no direct or inverse run is zero in the algebra.
bool is_valid_string(const Algebra& a, const StringWord& w);

std::string word_to_string(const Quiver& q, const StringWord& w);

/// All canonical strings of length <= cap (default 2 dim A) in canonical
/// order: by length, then lexicographically. Throws Error(NotStringAlgebra)
/// or Error(CapExceeded) when a valid string of length cap + 1 exists.
std::vector<StringWord> enumerate_strings(const Algebra& a, std::size_t cap = 0);

Representation string_to_rep(const AlgebraPtr& a, const StringWord& w);

}  // namespace taured
