#pragma once

#include <string>

#include "taured/reduction.hpp"

namespace taured {

/// The invariants that hold for every algebra (enumeration against the
/// quotient oracle, tau of projectives, Yoneda, Hasse shape, sincerity)
/// followed by the reduction checks when a projective-injective exists.
Report verify_algebra(const AlgebraPtr& a, const Backend& backend = Backend::strings(), const std::string& name = "");

}  // namespace taured
