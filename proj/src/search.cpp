#include "dkp/search.hpp"

#include <algorithm>
#include <cmath>

namespace dkp {

std::vector<double> grid_minima(const std::function<double(double)>& f, double lo, double hi,
                                int grid, double accept) {
  std::vector<double> xs(grid), fs(grid);
  for (int i = 0; i < grid; ++i) {
    xs[i] = lo + (hi - lo) * i / (grid - 1);
    fs[i] = f(xs[i]);
  }
  std::vector<double> out;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int i = 1; i + 1 < grid; ++i) {
    if (!(fs[i] <= fs[i - 1] && fs[i] <= fs[i + 1])) continue;
    double a = xs[i - 1], b = xs[i + 1];
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, std::fabs(a)); ++it) {
      if (fc < fd) {
        b = d, d = c, fd = fc;
        c = b - g * (b - a), fc = f(c);
      } else {
        a = c, c = d, fc = fd;
        d = a + g * (b - a), fd = f(d);
      }
    }
    double xm = fc < fd ? c : d;
    double fm = std::min(fc, fd);
    if (fm < accept && (out.empty() || xm - out.back() > 1e-9)) out.push_back(xm);
  }
  return out;
}

}  // namespace dkp
