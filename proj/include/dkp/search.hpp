#pragma once

#include <functional>
#include <vector>

namespace dkp {

/// Local minima of f on a uniform grid over [lo, hi], golden-section polished.
/// Only minima with value below accept are returned, ascending.
std::vector<double> grid_minima(const std::function<double(double)>& f, double lo, double hi,
                                int grid, double accept);

}  // namespace dkp
