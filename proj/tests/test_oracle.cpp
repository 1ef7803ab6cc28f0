#include <doctest.h>

#include <cmath>

#include "dkp/oracle.hpp"

using namespace dkp;

namespace {

PotentialSpec barrier(double a, double L, double V0) { return {Shape::WoodsSaxonBarrier, a, L, V0}; }
PotentialSpec well(double a, double L, double V0) { return {Shape::WoodsSaxonWell, a, L, V0}; }

}  // namespace

TEST_CASE("free propagation is exact") {
  for (double E : {1.1, 2.0, 3.7}) {
    auto t = ode_transmission(E, barrier(2, 2, 0));
    CHECK(std::abs(t.T - 1.0) < 1e-10);  // rounding over ~1e4 steps
    CHECK(t.R < 1e-20);
  }
}

TEST_CASE("oracle transmission at reported resonances") {
  CHECK(std::abs(ode_transmission(1.30086, barrier(2, 2, 5)).T - 1.0) < 2e-3);
  CHECK(std::abs(ode_transmission(2.63455, barrier(2, 0.4, 7.24)).T - 1.0) < 2e-3);
  CHECK(std::abs(ode_transmission(2.62679, PotentialSpec{Shape::CuspBarrier, 1.2, 0, 5}).T - 1.0) <
        2e-3);
}

TEST_CASE("oracle against closed forms") {
  auto spec = barrier(2, 2, 5);
  CHECK(std::abs(ode_transmission(2.5, spec).T - transmission(2.5, spec).T) < 1e-6);

  PotentialSpec sq{Shape::SquareBarrier, 1, 0.4, 4};
  auto t = ode_transmission(3.0, sq);
  CHECK(std::abs(t.T - square_barrier_transmission(3.0, 0.4, 4).T) < 1e-8);
  CHECK(std::abs(ode_transmission(2.0, sq).T - 1.0) < 1e-8);
}

TEST_CASE("property: oracle and closed form agree on 50-point grids") {
  for (auto spec : {barrier(2, 2, 5), barrier(3, 0.4, 5), barrier(70, 0.4, 4)}) {
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
      double E = 1.02 + (3.97 - 1.02) * i / 49.0;
      worst = std::max(worst, std::abs(ode_transmission(E, spec).T - transmission(E, spec).T));
    }
    CAPTURE(spec.a);
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("property: step halving") {
  for (auto spec : {barrier(2, 2, 5), barrier(3, 0.4, 5), barrier(70, 0.4, 4),
                    PotentialSpec{Shape::CuspBarrier, 1.2, 0, 5}}) {
    for (double E : {1.05, 1.3, 2.0, 2.6, 3.5}) {
      auto cfg = IntegratorConfig::for_spec(spec, E);
      auto half = cfg;
      half.step *= 0.5;
      CAPTURE(spec.a);
      CAPTURE(E);
      double d = std::abs(ode_transmission(E, spec, cfg).T - ode_transmission(E, spec, half).T);
      CHECK(d <= 1e-8);
    }
  }
}

TEST_CASE("property: Wronskian is constant") {
  for (auto method : {Method::Numerov, Method::RK4}) {
    for (auto spec : {barrier(2, 2, 5), PotentialSpec{Shape::CuspBarrier, 1.2, 0, 5}}) {
      auto cfg = IntegratorConfig::for_spec(spec, 1.7);
      cfg.method = method;
      if (method == Method::RK4) cfg.step = 0.001;
      auto w = wronskian_profile(1.7, spec, cfg);
      double ref = std::abs(w.back()), worst = 0;
      for (const auto& v : w) worst = std::max(worst, std::abs(v - w.back()) / ref);
      CAPTURE(static_cast<int>(method));
      CAPTURE(spec.a);
      CHECK(worst <= 1e-9);
    }
  }
}

TEST_CASE("integrator configuration") {
  auto spec = barrier(2, 2, 5);
  auto cfg = IntegratorConfig::for_spec(spec, 2.0);
  CHECK(cfg.x_min < -(2 + 40 / 2.0));
  CHECK(cfg.x_max > 2 + 40 / 2.0);
  CHECK(cfg.step <= std::min(0.01, 0.1 / max_wavenumber(spec, 2.0)));
  auto bad = cfg;
  bad.x_max = 10;
  CHECK_THROWS_AS(ode_transmission(2.0, spec, bad), DomainError);
  bad = cfg;
  bad.step = 0.05;
  CHECK_THROWS_AS(ode_transmission(2.0, spec, bad), DomainError);
  CHECK_THROWS_AS(ode_transmission(0.9, spec), DomainError);
  CHECK(IntegratorConfig::for_spec(PotentialSpec{Shape::SquareWell, 1, 2, 1}, 0).method == Method::RK4);
}

TEST_CASE("oracle resonances") {
  auto c = ode_resonances(PotentialSpec{Shape::CuspBarrier, 1.2, 0, 5}, 1.01, 4.0, 200);
  REQUIRE_FALSE(c.empty());
  bool hit = false;
  for (double E : c) hit = hit || std::abs(E - 2.62679) < 5e-3;
  CHECK(hit);
  auto w = ode_resonances(barrier(2, 0.4, 7.24), 1.01, 4.0, 200);
  REQUIRE(w.size() == 1);
  CHECK(std::abs(w[0] - 2.63455) < 2e-3);
}

TEST_CASE("shooting") {
  PotentialSpec sq{Shape::SquareWell, 1, 2, 2.02299};
  auto cfg = IntegratorConfig::for_spec(sq, -0.98);
  double E = shoot_bound_state(sq, {-0.9826, -0.975}, cfg);
  CHECK(std::abs(E + 0.9826) < 1e-3);
  CHECK(std::abs(square_well_mismatch(E, 2, 2.02299)) < 1e-7);

  auto w = well(2, 2, 1.0);
  auto roots = solve_bound_states(w);
  REQUIRE(roots.size() == 2);
  for (double r : roots) {
    double s = shoot_bound_state(w, {r - 1e-3, r + 1e-3}, IntegratorConfig::for_spec(w, r));
    CHECK(std::abs(s - r) < 1e-6);
  }

  PotentialSpec cusp{Shape::CuspWell, 1.2, 0, 3.04386};
  auto cc = IntegratorConfig::for_spec(cusp, -0.99999);
  double ec = shoot_bound_state(cusp, {-0.999996, -0.9999}, cc);
  CHECK(std::abs(ec + 0.99999) < 1e-3);

  CHECK_THROWS_AS(shoot_bound_state(w, {-0.5, 0.0}, IntegratorConfig::for_spec(w, 0)), NoRootError);
}

TEST_CASE("property: eigenvalue oracle agreement on 9 fixtures") {
  struct Set {
    double a, L;
    double depths[3];
  } sets[] = {{2, 2, {1.0, 1.8, 2.2}}, {3, 2, {0.8, 1.6, 2.2}}, {70, 0.3, {1.0, 2.0, 2.5}}};
  for (const auto& s : sets) {
    for (double V0 : s.depths) {
      auto spec = well(s.a, s.L, V0);
      auto closed = solve_bound_states(spec);
      auto shot = shoot_even_states(spec);
      CAPTURE(s.a);
      CAPTURE(V0);
      REQUIRE(closed.size() == shot.size());
      for (size_t i = 0; i < closed.size(); ++i) CHECK(std::abs(closed[i] - shot[i]) <= 1e-6);
    }
  }
}

TEST_CASE("particle branch descends, confirmed by shooting") {
  auto b = trace_spectrum(2, 2, 0, 3, 0.01)[0];
  std::vector<BoundState> part;
  for (const auto& p : b.points)
    if (p.kind == Kind::Particle) part.push_back(p);
  REQUIRE(part.size() > 20);
  double prev = 2.0;
  for (int i = 0; i < 10; ++i) {
    const auto& p = part[(part.size() - 1) * i / 9];
    auto spec = well(2, 2, p.V0);
    double E = shoot_bound_state(spec, {p.E - 1e-4, std::min(p.E + 1e-4, 1 - 1e-10)},
                                 IntegratorConfig::for_spec(spec, p.E));
    CHECK(std::abs(E - p.E) < 1e-6);
    CHECK(E < prev);
    prev = E;
  }
}

TEST_CASE("shallow square well holds one state") {
  auto m = square_well_model(2);
  auto spec = PotentialSpec{Shape::SquareWell, 1, 2, 0.1};
  auto shot = shoot_even_states(spec);
  REQUIRE(shot.size() == 1);
  CHECK(shot[0] > 0.9);
  CHECK(std::abs(m.mismatch(shot[0], 0.1)) < 1e-6);
  CHECK(shoot_even_states(PotentialSpec{Shape::SquareWell, 1, 2, 0.0}).empty());
}

TEST_CASE("oracle norms") {
  // particle point near the a = 3 fold
  auto m = woods_saxon_model(3, 2);
  auto cp = find_critical_potential(3, 2, 2.2);
  TurningPoint tp{cp.V_cr, cp.E_cr};
  double V = cp.V_cr - 1e-6;
  auto [ep, em] = fold_pair(m, tp, V);
  auto spec = well(3, 2, V);
  double np = ode_norm(ep, spec, IntegratorConfig::for_spec(spec, ep));
  double nm = ode_norm(em, spec, IntegratorConfig::for_spec(spec, em));
  CHECK(np > 0);
  CHECK(nm < 0);
  CHECK(np == doctest::Approx(norm(ep, spec)).epsilon(5e-3));

  auto c70 = find_critical_potential(70, 0.3, 2.5);
  double V70 = c70.V_cr - 1e-6;
  auto pair70 = fold_pair(woods_saxon_model(70, 0.3), {c70.V_cr, c70.E_cr}, V70);
  auto s70 = well(70, 0.3, V70);
  double n70 = ode_norm(pair70.first, s70, IntegratorConfig::for_spec(s70, pair70.first));
  CHECK(n70 == doctest::Approx(norm(pair70.first, s70)).epsilon(5e-3));
}

TEST_CASE("cusp well fold through shooting") {
  auto m = shooting_model(Shape::CuspWell, 1.2, 0);
  TraceOptions opt;
  opt.V0_max = 4, opt.step0 = 0.02, opt.antiparticle_points = 5;
  auto b = trace_branch(m, opt);
  REQUIRE(b.turning_point);
  CHECK(std::abs(b.turning_point->V_cr - 3.04386) < 5e-3);
  CHECK(std::abs(b.turning_point->E_cr + 0.99999) < 1e-3);
  for (const auto& p : b.points) CHECK((p.N > 0) == (p.kind == Kind::Particle));
}
