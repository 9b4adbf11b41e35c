#pragma once

#include <vector>

#include "scx/rational.hpp"

namespace scx {

/// Exact rank of an integer matrix via fraction-free (Bareiss) elimination.
int exact_rank(std::vector<std::vector<Integer>> m);

}  // namespace scx
