#pragma once

#include <optional>
#include <vector>

#include "zstab/rational.hpp"

namespace zstab {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

// Row-reduce in place; returns the rank.
unsigned row_reduce(Mat& m);

unsigned rank(Mat m);

// Basis of the right nullspace of m (rows are functionals on columns).
std::vector<Vec> nullspace(const Mat& m, size_t ncols);

// Least structured solve: find any x with m x = b, or nullopt.
std::optional<Vec> solve(Mat m, Vec b);

// True if v lies in the row span of m.
bool in_row_span(const Mat& m, const Vec& v);

}  // namespace zstab
