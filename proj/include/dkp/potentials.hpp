#pragma once

#include <string>

namespace dkp {

enum class Shape { WoodsSaxonBarrier, WoodsSaxonWell, SquareBarrier, SquareWell, CuspBarrier, CuspWell };

const char* shape_name(Shape s);
/// Inverse of shape_name; DomainError on an unknown name.
Shape shape_from_name(const std::string& name);

/// V(x) for one of the symmetric shapes. Square shapes ignore a, cusp shapes ignore L.
/// V0 = 0 is accepted and means no potential.
struct PotentialSpec {
  Shape shape = Shape::WoodsSaxonBarrier;
  double a = 1.0;
  double L = 1.0;
  double V0 = 0.0;

  bool is_well() const;
  bool is_woods_saxon() const;
  bool is_square() const;
  bool is_cusp() const;
  /// DomainError on non-finite or non-positive parameters.
  void validate() const;
};

double evaluate(const PotentialSpec& spec, double x);

/// evaluate(x) - evaluate(-x).
double symmetry_check(const PotentialSpec& spec, double x);

/// |x| beyond which |V| < V0 * 1e-17 (exactly L for square shapes).
double tail_extent(const PotentialSpec& spec);

}  // namespace dkp
