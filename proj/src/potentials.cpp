#include "dkp/potentials.hpp"

#include <cmath>

#include "dkp/errors.hpp"

namespace dkp {

namespace {

struct NamedShape {
  Shape shape;
  const char* name;
};

constexpr NamedShape kNames[] = {
    {Shape::WoodsSaxonBarrier, "WoodsSaxonBarrier"}, {Shape::WoodsSaxonWell, "WoodsSaxonWell"},
    {Shape::SquareBarrier, "SquareBarrier"},         {Shape::SquareWell, "SquareWell"},
    {Shape::CuspBarrier, "CuspBarrier"},             {Shape::CuspWell, "CuspWell"},
};

}  // namespace

const char* shape_name(Shape s) {
  for (const auto& n : kNames)
    if (n.shape == s) return n.name;
  return "?";
}

Shape shape_from_name(const std::string& name) {
  for (const auto& n : kNames)
    if (name == n.name) return n.shape;
  throw DomainError("unknown potential shape '" + name + "'");
}

bool PotentialSpec::is_well() const {
  return shape == Shape::WoodsSaxonWell || shape == Shape::SquareWell || shape == Shape::CuspWell;
}
bool PotentialSpec::is_woods_saxon() const {
  return shape == Shape::WoodsSaxonBarrier || shape == Shape::WoodsSaxonWell;
}
bool PotentialSpec::is_square() const {
  return shape == Shape::SquareBarrier || shape == Shape::SquareWell;
}
bool PotentialSpec::is_cusp() const {
  return shape == Shape::CuspBarrier || shape == Shape::CuspWell;
}

void PotentialSpec::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0; };
  if (!is_square() && !positive(a)) throw DomainError("potential: a must be finite and > 0");
  if (!is_cusp() && !positive(L)) throw DomainError("potential: L must be finite and > 0");
  if (!std::isfinite(V0) || V0 < 0) throw DomainError("potential: V0 must be finite and >= 0");
}

double evaluate(const PotentialSpec& spec, double x) {
  // every shape is a function of |x|; the x < 0 and x >= 0 forms coincide there
  double ax = std::fabs(x);
  double v;
  if (spec.is_woods_saxon())
    v = spec.V0 / (1.0 + std::exp(spec.a * (ax - spec.L)));
  else if (spec.is_square())
    v = ax <= spec.L ? spec.V0 : 0.0;
  else
    v = spec.V0 * std::exp(-ax / spec.a);
  return spec.is_well() ? -v : v;
}

double symmetry_check(const PotentialSpec& spec, double x) {
  return evaluate(spec, x) - evaluate(spec, -x);
}

double tail_extent(const PotentialSpec& spec) {
  if (spec.is_woods_saxon()) return spec.L + 40.0 / spec.a;
  if (spec.is_square()) return spec.L;
  return 40.0 * spec.a;
}

}  // namespace dkp
