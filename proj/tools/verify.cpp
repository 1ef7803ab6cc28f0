// Reference fixtures and oracle invariants run by `dkp verify`.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <limits>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "dkp/boundstates.hpp"
#include "dkp/errors.hpp"
#include "dkp/oracle.hpp"
#include "dkp/parallel.hpp"
#include "dkp/scattering.hpp"

namespace dkp::cli {

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Fixture {
  std::string id;
  bool oracle = false;
  std::function<Outcome()> run;
};

class Report {
 public:
  void check(bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4))) {
    char buf[256];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    if (!out_.detail.empty()) out_.detail += "; ";
    out_.detail += buf;
    if (!ok) out_.detail += " [x]";
    out_.pass = out_.pass && ok;
  }
  Outcome done() const { return out_; }

 private:
  Outcome out_;
};

bool near(double x, double ref, double tol) { return std::abs(x - ref) <= tol; }

PotentialSpec ws_barrier(double a, double L, double V0) { return {Shape::WoodsSaxonBarrier, a, L, V0}; }
PotentialSpec ws_well(double a, double L, double V0) { return {Shape::WoodsSaxonWell, a, L, V0}; }

Outcome resonance_set(const PotentialSpec& s, std::vector<double> ref) {
  Report r;
  auto got = find_resonances(s, 1.01, 4.0, 400);
  r.check(got.size() == ref.size(), "%zu resonances (want %zu)", got.size(), ref.size());
  for (std::size_t i = 0; i < std::min(got.size(), ref.size()); ++i)
    r.check(near(got[i], ref[i], 1e-3), "%.6f (%.5f)", got[i], ref[i]);
  return r.done();
}

double closest(const std::vector<double>& v, double x) {
  double best = std::nan("");
  for (double y : v)
    if (std::isnan(best) || std::abs(y - x) < std::abs(best - x)) best = y;
  return best;
}

// fold location plus the norm sign (and optionally magnitude) at the listed energy
Outcome critical_row(double a, double L, double V_ref, double E_ref, double N_ref, double N_rel) {
  Report r;
  auto cp = find_critical_potential(a, L, 3.0);
  r.check(near(cp.V_cr, V_ref, 1e-3), "V_cr=%.7f (%.5f)", cp.V_cr, V_ref);
  r.check(near(cp.E_cr, E_ref, 1e-3), "E_cr=%.7f (%.5f)", cp.E_cr, E_ref);
  double V = depth_at_energy(woods_saxon_model(a, L), E_ref, cp.V_cr);
  double N = norm(E_ref, ws_well(a, L, V));
  r.check((N > 0) == (N_ref > 0), "N=%.5e (%.5e)", N, N_ref);
  if (N_rel > 0) r.check(std::abs(N / N_ref - 1.0) <= N_rel, "|dN/N|=%.3f <= %.2f", std::abs(N / N_ref - 1.0), N_rel);
  r.check(true, "residual=%.2e", cp.residual_err);
  return r.done();
}

// pair just below the fold; higher E is the particle state
Outcome fold_pair_row(const BranchModel& m, const TurningPoint& tp, double E_hi, double E_lo,
                      const std::function<double(double, double)>& N) {
  Report r;
  double V = tp.V_cr - 1e-7;
  auto [ep, em] = fold_pair(m, tp, V);
  r.check(near(ep, E_hi, 1e-3), "E+=%.6f (%.5f)", ep, E_hi);
  r.check(near(em, E_lo, 1e-3), "E-=%.6f (%.5f)", em, E_lo);
  double np = N(ep, V), nm = N(em, V);
  r.check(np > 0 && nm < 0, "N+=%.3e N-=%.3e", np, nm);
  return r.done();
}

std::vector<Fixture> fixtures() {
  std::vector<Fixture> f;
  f.push_back({"f3", false, [] { return resonance_set(ws_barrier(2, 2, 5), {1.30086, 1.96049, 2.67321, 3.47053}); }});
  f.push_back({"f6", false, [] { return resonance_set(ws_barrier(3, 0.4, 5), {1.57991}); }});
  f.push_back({"t2", false, [] {
                 Report r;
                 double ws = closest(find_resonances(ws_barrier(70, 0.4, 4), 1.01, 4.0, 400), 1.97899);
                 double sq = closest(find_square_resonances(0.4, 4, 1.01, 4.0, 400), 2.0);
                 r.check(near(ws, 1.97899, 1e-3), "WS %.6f (1.97899)", ws);
                 r.check(near(sq, 2.0, 1e-6), "square %.8f (2.00000)", sq);
                 return r.done();
               }});
  f.push_back({"tcusp", false, [] {
                 Report r;
                 auto ws = ws_barrier(2, 0.4, 7.24);
                 double e1 = closest(find_resonances(ws, 1.01, 4.0, 400), 2.63455);
                 double e2 = closest(ode_resonances(ws, 1.01, 4.0, 200), 2.63455);
                 double ec = closest(ode_resonances({Shape::CuspBarrier, 1.2, 1.0, 5}, 1.01, 4.0, 200), 2.62679);
                 r.check(near(e1, 2.63455, 2e-3), "WS %.6f (2.63455)", e1);
                 r.check(near(e2, 2.63455, 2e-3), "WS oracle %.6f", e2);
                 r.check(near(ec, 2.62679, 5e-3), "cusp oracle %.6f (2.62679)", ec);
                 return r.done();
               }});
  struct Row {
    const char* id;
    double a, L, V, E, N, rel;
  };
  const Row rows[] = {
      {"t3a2", 2, 2, 2.34627, -0.99993, -1.30922e-1, 0},
      {"t3a3", 3, 2, 2.22881, -0.99949, 1.11673e-1, 0.1},
      {"t3a6", 6, 2, 2.12976, -0.99669, 3.10581e-2, 0},
      {"t3a18", 18, 2, 2.06256, -0.98971, -2.21645e-3, 0},
      {"t4L01", 70, 0.1, 3.90056, -0.57536, 1.31212e-3, 0},
      {"t4L02", 70, 0.2, 2.92953, -0.70249, 3.91291e-3, 0},
      {"t4L03", 70, 0.3, 2.58084, -0.77846, 5.24853e-3, 0},
      {"t4L04", 70, 0.4, 2.40307, -0.82924, 4.49504e-3, 0},
      {"t6ws", 2, 0.4, 4.30245, -0.99690, 3.70029e-1, 0},
  };
  for (const auto& w : rows)
    f.push_back({w.id, false, [w] { return critical_row(w.a, w.L, w.V, w.E, w.N, w.rel); }});
  f.push_back({"t5sq", false, [] {
                 auto b = square_well_spectrum(2, 0, 2.1);
                 if (!b.turning_point) return Outcome{false, "no fold"};
                 Report r;
                 r.check(near(b.turning_point->V_cr, 2.02299, 1e-4), "V_cr=%.7f (2.02299)", b.turning_point->V_cr);
                 auto p = fold_pair_row(square_well_model(2), *b.turning_point, -0.98257, -0.98269,
                                        [](double E, double V) { return square_well_norm(E, 2, V); });
                 r.check(p.pass, "%s", p.detail.c_str());
                 return r.done();
               }});
  f.push_back({"t5ws", false, [] {
                 auto cp = find_critical_potential(18, 2, 3.0);
                 return fold_pair_row(woods_saxon_model(18, 2), {cp.V_cr, cp.E_cr}, -0.98968, -0.98978,
                                      [](double E, double V) { return norm(E, ws_well(18, 2, V)); });
               }});
  f.push_back({"t6cusp", false, [] {
                 TraceOptions opt;
                 opt.V0_max = 4, opt.step0 = 0.02, opt.antiparticle_points = 5;
                 auto b = trace_branch(shooting_model(Shape::CuspWell, 1.2, 0), opt);
                 if (!b.turning_point) return Outcome{false, "no fold"};
                 Report r;
                 r.check(near(b.turning_point->V_cr, 3.04386, 5e-3), "V_cr=%.6f (3.04386)", b.turning_point->V_cr);
                 r.check(near(b.turning_point->E_cr, -0.99999, 1e-3), "E_cr=%.7f (-0.99999)", b.turning_point->E_cr);
                 bool pos = true;
                 int np = 0;
                 for (const auto& p : b.points)
                   if (p.kind == Kind::Particle && p.V0 > 2.5) pos = pos && p.N > 0, ++np;
                 r.check(pos && np > 0, "N > 0 on %d particle points near the fold", np);
                 return r.done();
               }});

  // oracle invariants
  const PotentialSpec sets[] = {ws_barrier(2, 2, 5), ws_barrier(3, 0.4, 5), ws_barrier(70, 0.4, 4)};
  f.push_back({"unitarity", true, [sets] {
                 Report r;
                 for (const auto& s : sets) {
                   auto d = parallel_map<double>(200, [&](std::size_t i) {
                     auto t = transmission(1.01 + 2.99 * i / 199.0, s);
                     return std::abs(t.T + t.R - 1.0);
                   });
                   double w = *std::max_element(d.begin(), d.end());
                   r.check(w <= 1e-8, "a=%g: %.1e", s.a, w);
                 }
                 return r.done();
               }});
  f.push_back({"closed-form", true, [sets] {
                 Report r;
                 for (const auto& s : sets) {
                   auto d = parallel_map<double>(50, [&](std::size_t i) {
                     double E = 1.02 + 2.95 * i / 49.0;
                     return std::abs(ode_transmission(E, s).T - transmission(E, s).T);
                   });
                   double w = *std::max_element(d.begin(), d.end());
                   r.check(w <= 1e-6, "a=%g: %.1e", s.a, w);
                 }
                 return r.done();
               }});
  f.push_back({"branch", true, [sets] {
                 Report r;
                 for (const auto& s : sets) {
                   double w = 0;
                   for (int i = 0; i < 50; ++i) {
                     double E = 1.02 + 2.95 * i / 49.0;
                     auto p = transmission(E, s), q = transmission(E, s, LogBranch::Lower);
                     w = std::max({w, std::abs(p.T - q.T), std::abs(p.R - q.R)});
                   }
                   r.check(w <= 1e-10, "a=%g: %.1e", s.a, w);
                 }
                 return r.done();
               }});
  f.push_back({"wronskian", true, [] {
                 Report r;
                 for (auto s : {ws_barrier(2, 2, 5), PotentialSpec{Shape::CuspBarrier, 1.2, 1.0, 5}}) {
                   auto w = wronskian_profile(1.7, s, IntegratorConfig::for_spec(s, 1.7));
                   double worst = 0;
                   for (const auto& v : w) worst = std::max(worst, std::abs(v - w.back()) / std::abs(w.back()));
                   r.check(worst <= 1e-9, "%s: %.1e", shape_name(s.shape), worst);
                 }
                 return r.done();
               }});
  f.push_back({"eigen", true, [] {
                 Report r;
                 struct D {
                   double a, L, V0;
                 };
                 const D ds[] = {{2, 2, 1.0}, {2, 2, 1.8}, {2, 2, 2.2}, {3, 2, 0.8}, {3, 2, 1.6},
                                 {3, 2, 2.2}, {70, 0.3, 1.0}, {70, 0.3, 2.0}, {70, 0.3, 2.5}};
                 auto d = parallel_map<double>(9, [&](std::size_t i) {
                   auto s = ws_well(ds[i].a, ds[i].L, ds[i].V0);
                   auto c = solve_bound_states(s), o = shoot_even_states(s);
                   if (c.size() != o.size()) return std::numeric_limits<double>::infinity();
                   double w = 0;
                   for (std::size_t k = 0; k < c.size(); ++k) w = std::max(w, std::abs(c[k] - o[k]));
                   return w;
                 });
                 for (int i = 0; i < 9; ++i)
                   r.check(d[i] <= 1e-6, "(%g,%g,%g): %.1e", ds[i].a, ds[i].L, ds[i].V0, d[i]);
                 return r.done();
               }});
  f.push_back({"fold-sqrt", true, [] {
                 Report r;
                 auto m = woods_saxon_model(6, 2);
                 auto cp = find_critical_potential(6, 2, 2.0);
                 double ref = 0;
                 for (double d : {1e-4, 5e-5, 2e-5, 1e-5}) {
                   auto [ep, em] = fold_pair(m, {cp.V_cr, cp.E_cr}, cp.V_cr - d);
                   double c = (ep - em) / std::sqrt(d);
                   if (ref == 0) ref = c;
                   r.check(std::abs(c / ref - 1.0) < 0.2, "d=%.0e: %.3f", d, c / ref);
                 }
                 return r.done();
               }});
  return f;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& console) {
  auto all = fixtures();
  std::vector<Fixture> sel;
  for (const auto& f : all) {
    if (!cfg.fixture.empty() ? f.id == cfg.fixture : (!cfg.oracle_only || f.oracle)) sel.push_back(f);
  }
  if (sel.empty()) {
    std::string ids;
    for (const auto& f : all) ids += " " + f.id;
    throw DomainError("unknown fixture '" + cfg.fixture + "'; known:" + ids);
  }
  int failed = 0;
  for (const auto& f : sel) {
    Outcome o;
    try {
      o = f.run();
    } catch (const Error& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    char head[32];
    std::snprintf(head, sizeof head, "%-4s %-12s ", o.pass ? "PASS" : "FAIL", f.id.c_str());
    console << head << o.detail << std::endl;
    failed += !o.pass;
  }
  console << sel.size() - failed << "/" << sel.size() << " passed\n";
  return failed ? kVerifyFailed : kOk;
}

}  // namespace dkp::cli
