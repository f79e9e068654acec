#include "mkdv/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "mkdv/dynamics.hpp"
#include "mkdv/gauges.hpp"
#include "mkdv/norms.hpp"
#include "mkdv/parallel.hpp"
#include "mkdv/phase.hpp"
#include "mkdv/serialization.hpp"
#include "mkdv/spectral.hpp"

namespace mkdv {
namespace {

using io::format_double;

template <class T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    if constexpr (std::is_floating_point_v<T>) {
      out << format_double(values[i]);
    } else {
      out << values[i];
    }
  }
  return out.str();
}

std::string eq_text(const EquationSpec& eq) {
  return std::string(to_string(eq.variant)) + (eq.sign > 0 ? ",+1" : ",-1");
}

FourierState difference(const FourierState& a, const FourierState& b) {
  FourierState out = a;
  for (int n = -a.mode_cap(); n <= a.mode_cap(); ++n) out[n] -= b[n];
  return out;
}

FourierState scaled(const FourierState& a, double factor) {
  FourierState out = a;
  for (auto& c : out.coeffs()) c *= factor;
  return out;
}

double sup_difference(const Trajectory& a, const Trajectory& b, double s, double p) {
  double worst = 0.0;
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
    worst = std::max(worst, fl_norm(difference(a.states[k], b.states[k]), s, p));
  }
  return worst;
}

double sup_norm_over_time(const Trajectory& a, double s, double p) {
  double worst = 0.0;
  for (const auto& slice : a.states) worst = std::max(worst, fl_norm(slice, s, p));
  return worst;
}

void check_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(name) + " must be positive and finite");
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw ConfigError("sign must be +1 or -1");
}

void echo_solver(ExperimentReport& r, double T, double dt, int modes, std::size_t stride) {
  r.parameters["T"] = format_double(T);
  r.parameters["dt"] = format_double(dt);
  r.parameters["modes"] = std::to_string(modes);
  r.parameters["sample_stride"] = std::to_string(stride);
}

Trajectory solve_or_abort(ExperimentReport& report, const std::string& label, const FourierState& ic,
                          const EquationSpec& eq, double T, double dt, std::size_t stride,
                          const std::function<void(const Trajectory&)>& record_partial = {}) {
  SolveOptions opts;
  opts.sample_stride = stride;
  try {
    Trajectory traj = solve(ic, eq, T, dt, opts);
    for (const auto& w : traj.warnings) report.notes.push_back(label + ": " + w);
    return traj;
  } catch (const SolverAbort& e) {
    if (record_partial) record_partial(e.partial());
    report.add_verdict("solver_completed", false, e.partial().final_time(), T, ">=",
                       label + " aborted: " + e.what());
    throw ExperimentAbort(label + ": " + e.what(), report);
  }
}

double trapezoid_pairing_weight(std::size_t k, std::size_t count) {
  return (k == 0 || k + 1 == count) ? 0.5 : 1.0;
}

// int_0^T w(t) u^(t, 1) dt for phi(t, x) = w(t) e^{ix}.
cplx pairing(const Trajectory& traj, double T) {
  cplx acc{};
  const double t0 = traj.states.front().time();
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const auto& slice = traj.states[k];
    const double w = raised_cosine((slice.time() - t0) / T);
    acc += trapezoid_pairing_weight(k, traj.size()) * w * slice.coeff_or_zero(1);
  }
  return acc * traj.sample_dt;
}

}  // namespace

// ---------------------------------------------------------------------------

ExperimentReport exp_conservation(const ConservationParams& params) {
  check_positive(params.T, "T");
  check_positive(params.dt, "dt");
  ExperimentReport r;
  r.name = "conservation";
  r.parameters["equation"] = eq_text(params.equation);
  r.parameters["ic"] = to_string(params.ic);
  echo_solver(r, params.T, params.dt, params.modes, params.sample_stride);
  const FourierState ic = make_initial_state(params.ic, params.modes);
  const double m0 = mass(ic);
  const double p0 = momentum(ic);

  auto record = [&](const Trajectory& traj) {
    auto& ms = r.add_series("mass", "t", "mass");
    auto& ps = r.add_series("momentum", "t", "momentum");
    auto& ns = r.add_series("fl_half_two", "t", "FL^{1/2,2}");
    double mass_drift = 0.0, momentum_drift = 0.0;
    for (const auto& slice : traj.states) {
      const double m = mass(slice);
      const double p = momentum(slice);
      ms.points.emplace_back(slice.time(), m);
      ps.points.emplace_back(slice.time(), p);
      ns.points.emplace_back(slice.time(), fl_norm(slice, 0.5, 2.0));
      mass_drift = std::max(mass_drift, std::abs(m - m0) / (m0 > 0.0 ? m0 : 1.0));
      momentum_drift = std::max(momentum_drift, std::abs(p - p0));
    }
    r.scalars["mass_initial"] = m0;
    r.scalars["momentum_initial"] = p0;
    r.scalars["mass_drift_relative"] = mass_drift;
    r.scalars["momentum_drift_absolute"] = momentum_drift;
    r.add_verdict("mass_drift", mass_drift <= params.mass_tol, mass_drift, params.mass_tol, "<=");
    r.add_verdict("momentum_drift", momentum_drift <= params.momentum_tol, momentum_drift, params.momentum_tol,
                  "<=");
  };
  const Trajectory traj =
      solve_or_abort(r, "solve", ic, params.equation, params.T, params.dt, params.sample_stride, record);
  record(traj);
  return r;
}

ExperimentReport exp_gauge_equivalence(const GaugeEquivalenceParams& params) {
  check_positive(params.T, "T");
  check_positive(params.dt, "dt");
  check_sign(params.sign);
  ExperimentReport r;
  r.name = "gauge_equivalence";
  r.parameters["ic"] = to_string(params.ic);
  r.parameters["sign"] = std::to_string(params.sign);
  echo_solver(r, params.T, params.dt, params.modes, params.sample_stride);
  const FourierState ic = make_initial_state(params.ic, params.modes);
  const int sg = params.sign;
  const Trajectory u0 = solve_or_abort(r, "mkdv", ic, {Variant::mKdV, sg}, params.T, params.dt, params.sample_stride);
  const Trajectory u1 = solve_or_abort(r, "mkdv1", ic, {Variant::mKdV1, sg}, params.T, params.dt, params.sample_stride);
  const Trajectory u2 = solve_or_abort(r, "mkdv2", ic, {Variant::mKdV2, sg}, params.T, params.dt, params.sample_stride);
  const double P0 = momentum(ic);
  r.scalars["mass_initial"] = mass(ic);
  r.scalars["momentum_initial"] = P0;

  const Trajectory g1 = apply_gauge1(u0, sg);
  const Trajectory g2 = apply_gauge2(u1, sg, P0);
  const Trajectory g21 = apply_gauge2(g1, sg, P0);
  struct Pair {
    const char* key;
    const Trajectory& a;
    const Trajectory& b;
  };
  for (const Pair& pr : {Pair{"G1_mkdv_vs_mkdv1", g1, u1}, Pair{"G2_mkdv1_vs_mkdv2", g2, u2},
                         Pair{"G2G1_mkdv_vs_mkdv2", g21, u2}}) {
    auto& s = r.add_series(pr.key, "t", "FL^{1/2,2} difference");
    double worst = 0.0;
    for (std::size_t k = 0; k < pr.a.size(); ++k) {
      const double d = fl_norm(difference(pr.a.states[k], pr.b.states[k]), 0.5, 2.0);
      s.points.emplace_back(pr.a.states[k].time(), d);
      worst = std::max(worst, d);
    }
    r.scalars[std::string("sup_") + pr.key] = worst;
    r.add_verdict(pr.key, worst <= params.tol, worst, params.tol, "<=");
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct FamilyMember {
  int N = 0;
  double P = 0.0;
  Trajectory v;
  Trajectory u;
  cplx pair{};
};

std::vector<FamilyMember> run_family(ExperimentReport& r, const std::string& label, const FourierState& full,
                                     const std::vector<int>& schedule, const NonexistenceParams& params) {
  std::vector<FamilyMember> out;
  for (int N : schedule) {
    FamilyMember m;
    m.N = N;
    const FourierState ic = project_low(full, N);
    m.P = momentum(ic);
    // Real data peaks higher than one-sided data; halve the step until dt M max|u0|^2 <= 2.
    std::size_t substeps = 1;
    while (params.dt / static_cast<double>(substeps) > 4.0 * stable_dt_bound(ic)) substeps *= 2;
    r.parameters["substeps." + label + ".N" + std::to_string(N)] = std::to_string(substeps);
    m.v = solve_or_abort(r, label + " N=" + std::to_string(N), ic, {Variant::mKdV2, params.sign}, params.T,
                         params.dt / static_cast<double>(substeps), params.sample_stride * substeps);
    m.u = invert_gauge(m.v, GaugeSpec{GaugeKind::G2, params.sign, m.P});
    m.pair = pairing(m.u, params.T);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

ExperimentReport exp_nonexistence(const NonexistenceParams& params) {
  check_positive(params.T, "T");
  check_positive(params.dt, "dt");
  check_sign(params.sign);
  if (params.schedule.size() < 4) throw ConfigError("nonexistence: schedule needs at least 4 entries");
  if (!std::is_sorted(params.schedule.begin(), params.schedule.end()) || params.schedule.front() < 1) {
    throw ConfigError("nonexistence: schedule must be positive and increasing");
  }
  if (params.schedule.back() > params.modes) {
    throw ConfigError("nonexistence: schedule entry " + std::to_string(params.schedule.back()) +
                      " exceeds the mode cap " + std::to_string(params.modes));
  }
  ExperimentReport r;
  r.name = "nonexistence";
  r.parameters["s"] = format_double(params.s);
  r.parameters["p"] = format_double(params.p);
  r.parameters["alpha"] = format_double(params.alpha);
  r.parameters["data"] = params.symmetric_data ? "symmetric" : "one_sided";
  r.parameters["schedule"] = join(params.schedule);
  r.parameters["sign"] = std::to_string(params.sign);
  r.parameters["test_function"] = "raised_cosine(t/T) e^{ix}";
  echo_solver(r, params.T, params.dt, params.modes, params.sample_stride);

  // Series oracles: <n>^s n^{-alpha} in l^p iff p (alpha - s) > 1; sum n^{1-2 alpha} diverges iff alpha <= 1.
  const double membership = params.p * (params.alpha - params.s);
  r.add_verdict("oracle_membership", membership > 1.0, membership, 1.0, ">", "p (alpha - s) > 1");
  r.add_verdict("oracle_momentum_divergence", params.alpha <= 1.0, params.alpha, 1.0, "<=",
                "sum n^{1 - 2 alpha} diverges");

  const Preset data{params.symmetric_data ? Preset::Kind::symmetric : Preset::Kind::one_sided, {params.alpha}};
  const FourierState full = make_initial_state(data, params.modes);
  const auto main = run_family(r, "main", full, params.schedule, params);

  auto& ps = r.add_series("momentum_truncations", "N", "P_N");
  auto& pair_s = r.add_series("pairing", "N", "|<u_N, phi>|");
  auto& vd = r.add_series("v_cauchy", "N", "sup_t FL^{s,p}(v_N - v_N')");
  auto& ud = r.add_series("u_cauchy", "N", "sup_t FL^{s,p}(u_N - u_N')");
  for (const auto& m : main) {
    ps.points.emplace_back(m.N, m.P);
    pair_s.points.emplace_back(m.N, std::abs(m.pair));
  }
  double min_u_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < main.size(); ++i) {
    vd.points.emplace_back(main[i + 1].N, sup_difference(main[i].v, main[i + 1].v, params.s, params.p));
    const double gap = sup_difference(main[i].u, main[i + 1].u, params.s, params.p);
    ud.points.emplace_back(main[i + 1].N, gap);
    min_u_gap = std::min(min_u_gap, gap);
  }
  // u-difference between consecutive N over time, for the first pair (the phase beat is visible here).
  {
    auto& beat = r.add_series("u_difference_first_pair", "t", "FL^{s,p}(u_N1 - u_N2)");
    for (std::size_t k = 0; k < main[0].u.size(); ++k) {
      beat.points.emplace_back(main[0].u.states[k].time(),
                               fl_norm(difference(main[0].u.states[k], main[1].u.states[k]), params.s, params.p));
    }
  }
  const double v_norm = sup_norm_over_time(main.back().v, params.s, params.p);
  r.scalars["v_norm"] = v_norm;
  const double shrink = vd.points.front().second / std::max(vd.points.back().second, 1e-300);
  r.scalars["v_cauchy_shrink"] = shrink;
  r.add_verdict("v_cauchy_shrinks", shrink >= params.cauchy_shrink, shrink, params.cauchy_shrink, ">=",
                "first / last consecutive v-difference");
  const double sep = min_u_gap / std::max(v_norm, 1e-300);
  r.add_verdict("u_differences_separated", sep >= params.separation, sep, params.separation, ">=",
                "min consecutive u-difference / ||v||");

  // Increments of a convergent series shrink to zero; here they must not shrink across the schedule.
  const MomentumSeries diag = momentum_limit_diagnostic(full, params.schedule);
  const auto& tr = diag.truncations;
  bool increasing = true;
  for (std::size_t i = 0; i + 1 < tr.size(); ++i) increasing = increasing && tr[i + 1].second > tr[i].second;
  const double increment_growth =
      (tr.back().second - tr[tr.size() - 2].second) / std::max(std::abs(tr[1].second - tr[0].second), 1e-300);
  r.scalars["momentum_increment_growth"] = increment_growth;
  r.notes.push_back("momentum diagnostic on the schedule: " + to_string(diag.verdict));
  r.add_verdict("momentum_unstabilized",
                increasing && diag.verdict != MomentumVerdict::converged && increment_growth >= 1.0,
                increment_growth, 1.0, ">=",
                "P_N increasing, not converged, last increment / first increment; diagnostic " +
                    to_string(diag.verdict));
  {
    // Same data continued to N = 4096 on a dyadic schedule from 16 (no solve needed).
    std::vector<int> dyadic;
    for (int N = 16; N <= 4096; N *= 2) dyadic.push_back(N);
    const MomentumSeries ext = momentum_limit_diagnostic(make_initial_state(data, 4096), dyadic);
    auto& es = r.add_series("momentum_truncations_extended", "N", "P_N");
    for (const auto& pt : ext.truncations) es.points.emplace_back(pt.first, pt.second);
    r.notes.push_back("momentum diagnostic on 16..4096: " + to_string(ext.verdict));
    r.scalars["momentum_extended_diverging"] = ext.verdict == MomentumVerdict::diverging ? 1.0 : 0.0;
  }
  const double pr = std::abs(main.back().pair) / std::max(std::abs(main.front().pair), 1e-300);
  r.scalars["pairing_ratio"] = pr;
  r.add_verdict("pairing_decays", pr <= params.pairing_ratio, pr, params.pairing_ratio, "<=",
                "|pairing(N_last)| / |pairing(N_first)|");

  // Control: real-valued data, P_N = 0, so u_N and v_N coincide and the pairing has no phase to lose.
  const FourierState sym = make_initial_state(Preset{Preset::Kind::symmetric, {params.alpha}}, params.modes);
  const auto control =
      run_family(r, "control", sym, {params.schedule.front(), params.schedule.back()}, params);
  double control_gap = 0.0, control_p = 0.0;
  for (const auto& m : control) {
    control_gap = std::max(control_gap, sup_difference(m.u, m.v, 0.0, 2.0));
    control_p = std::max(control_p, std::abs(m.P));
  }
  r.add_verdict("control_momentum_zero", control_p == 0.0, control_p, 0.0, "==");
  r.add_verdict("control_u_equals_v", control_gap == 0.0, control_gap, 0.0, "==");
  const double cr = std::abs(control.back().pair) / std::max(std::abs(control.front().pair), 1e-300);
  r.scalars["control_pairing_ratio"] = cr;
  r.add_verdict("control_pairing_persists", cr >= params.control_pairing_ratio, cr, params.control_pairing_ratio,
                ">=");
  return r;
}

// ---------------------------------------------------------------------------

double separation_time(int n, std::int64_t N, double s) {
  const double g = (1.0 + 1.0 / n) * (1.0 + 1.0 / n) - 1.0;
  return std::numbers::pi * std::pow(static_cast<double>(N), 2.0 * s - 1.0) / g;
}

std::int64_t minimal_frequency(int n, double s) {
  if (n < 1) throw ConfigError("illposedness: n must be positive");
  if (!(s < 0.5)) throw ConfigError("illposedness: requires s < 1/2");
  // N^{1-2s} >= pi n / ((1+1/n)^2 - 1); start from the real root and settle on integers.
  const double g = (1.0 + 1.0 / n) * (1.0 + 1.0 / n) - 1.0;
  auto N = static_cast<std::int64_t>(std::ceil(std::pow(std::numbers::pi * n / g, 1.0 / (1.0 - 2.0 * s))));
  N = std::max<std::int64_t>(N, 1);
  while (N > 1 && separation_time(n, N - 1, s) <= 1.0 / n) --N;
  while (separation_time(n, N, s) > 1.0 / n) ++N;
  return N;
}

ExperimentReport exp_illposedness(const IllposednessParams& params) {
  check_sign(params.sign);
  if (!(params.s < 0.5)) throw ConfigError("illposedness: requires s < 1/2");
  if (params.n_list.empty()) throw ConfigError("illposedness: n_list is empty");
  std::int64_t fixed = 0;
  if (params.n_rule.rfind("fixed:", 0) == 0) {
    try {
      fixed = std::stoll(params.n_rule.substr(6));
    } catch (const std::exception&) {
      throw ConfigError("illposedness: malformed N_rule '" + params.n_rule + "'");
    }
    if (fixed < 1) throw ConfigError("illposedness: fixed N must be positive");
  } else if (params.n_rule != "minimal") {
    throw ConfigError("illposedness: N_rule must be 'minimal' or 'fixed:<N>'");
  }
  ExperimentReport r;
  r.name = "illposedness";
  r.parameters["s"] = format_double(params.s);
  r.parameters["p"] = format_double(params.p);
  r.parameters["n_list"] = join(params.n_list);
  r.parameters["N_rule"] = params.n_rule;
  r.parameters["sign"] = std::to_string(params.sign);
  r.parameters["phase_step"] = format_double(params.phase_step);
  r.parameters["run_solver"] = params.run_solver ? "true" : "false";

  auto& init_s = r.add_series("initial_distance", "n", "analytic");
  auto& sol_s = r.add_series("solution_distance", "n", "analytic");
  auto& tn_s = r.add_series("t_n", "n", "t_n");
  auto& N_s = r.add_series("N_n", "n", "N");
  Series* solver_init = nullptr;
  Series* solver_sol = nullptr;
  if (params.run_solver) {
    solver_init = &r.add_series("solver_initial_distance", "n", "solver");
    solver_sol = &r.add_series("solver_solution_distance", "n", "solver");
  }
  double min_solution = std::numeric_limits<double>::infinity();
  double worst_solver = 0.0;
  for (int n : params.n_list) {
    const std::int64_t N = fixed ? fixed : minimal_frequency(n, params.s);
    const double tn = separation_time(n, N, params.s);
    if (tn > 1.0 / n) {
      throw ConfigError("illposedness: N_rule gives t_n = " + format_double(tn) + " > 1/n for n = " +
                        std::to_string(n));
    }
    const double Nd = static_cast<double>(N);
    const double bracket = std::pow(japanese_bracket(Nd), params.s) * std::pow(Nd, -params.s);
    const double a = 1.0, at = 1.0 + 1.0 / n;
    const double nl = std::pow(Nd, 1.0 - 2.0 * params.s);  // |A|^2 N for a = 1
    const double delta = params.sign * nl * (at * at - a * a) * tn;
    const double d0 = bracket * std::abs(a - at);
    const double dt_n = bracket * std::abs(a - at * std::polar(1.0, delta));
    init_s.points.emplace_back(n, d0);
    sol_s.points.emplace_back(n, dt_n);
    tn_s.points.emplace_back(n, tn);
    N_s.points.emplace_back(n, Nd);
    min_solution = std::min(min_solution, dt_n);

    if (!params.run_solver) continue;
    if (N > std::numeric_limits<int>::max() / 8) throw ConfigError("illposedness: N too large for the solver");
    const int cap = static_cast<int>(N);
    const double amp = std::pow(Nd, -params.s);
    const FourierState u0 = FourierState::single_mode(cap, cap, amp * a);
    const FourierState v0 = FourierState::single_mode(cap, cap, amp * at);
    const auto steps = static_cast<std::size_t>(std::ceil(nl * at * at * tn / params.phase_step));
    const double dt = tn / static_cast<double>(steps);
    const EquationSpec eq{Variant::mKdV, params.sign};
    const std::string label = "n=" + std::to_string(n);
    const Trajectory tu = solve_or_abort(r, label, u0, eq, tn, dt, steps);
    const Trajectory tv = solve_or_abort(r, label + " perturbed", v0, eq, tn, dt, steps);
    const double s0 = fl_norm(difference(tu.states.front(), tv.states.front()), params.s, params.p);
    const double s1 = fl_norm(difference(tu.states.back(), tv.states.back()), params.s, params.p);
    solver_init->points.emplace_back(n, s0);
    solver_sol->points.emplace_back(n, s1);
    // Exact plane waves at t_n: phase N^3 t + sign |A|^2 N t.
    for (const auto& [traj, amp_n] : {std::pair{&tu, a}, std::pair{&tv, at}}) {
      const auto& last = traj->states.back();
      const double phase = reduced_phase(static_cast<std::int64_t>(N) * N * N, tn) +
                           params.sign * nl * amp_n * amp_n * tn;
      const cplx exact = amp * amp_n * std::polar(1.0, phase);
      FourierState ex(cap, tn);
      ex[cap] = exact;
      worst_solver = std::max(worst_solver, std::pow(japanese_bracket(Nd), params.s) * max_abs_difference(last, ex));
    }
    worst_solver = std::max({worst_solver, std::abs(s0 - d0), std::abs(s1 - dt_n)});
  }
  const double first = init_s.points.front().second, last = init_s.points.back().second;
  r.add_verdict("initial_distance_decays", params.n_list.size() < 2 ? first > 0.0 : last < first, last, first, "<",
                "initial distance at the largest n vs the smallest n");
  r.add_verdict("solution_distance_floor", min_solution >= params.solution_floor, min_solution,
                params.solution_floor, ">=");
  r.scalars["min_solution_distance"] = min_solution;
  if (params.run_solver) {
    r.scalars["solver_max_deviation"] = worst_solver;
    r.add_verdict("solver_agrees", worst_solver <= params.solver_tol, worst_solver, params.solver_tol, "<=",
                  "max over n of solver vs analytic distances and states");
  }
  return r;
}

// ---------------------------------------------------------------------------

double random_momentum_second_moment(int N) {
  double sum = 0.0;
  for (int n = N; n >= 1; --n) sum += 1.0 / (static_cast<double>(n) * n);
  return 8.0 * sum;
}

ExperimentReport exp_random_momentum(const RandomMomentumParams& params) {
  if (params.samples < 100) throw ConfigError("random_momentum: needs at least 100 samples");
  if (params.N < 1) throw ConfigError("random_momentum: N must be positive");
  ExperimentReport r;
  r.name = "random_momentum";
  r.seed = params.seed;
  r.parameters["samples"] = std::to_string(params.samples);
  r.parameters["N"] = std::to_string(params.N);
  r.parameters["seed"] = std::to_string(params.seed);
  r.parameters["real_only"] = params.real_only ? "true" : "false";

  std::vector<double> values(params.samples);
  const int N = params.N;
  parallel_for(0, static_cast<std::ptrdiff_t>(params.samples), [&](std::ptrdiff_t k) {
    // One generator per sample keeps the draw independent of the worker count.
    std::seed_seq seq{static_cast<std::uint32_t>(params.seed), static_cast<std::uint32_t>(params.seed >> 32),
                      static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(static_cast<std::uint64_t>(k) >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss(0.0, 1.0);
    FourierState u(N);
    for (int n = 1; n <= N; ++n) {
      const cplx g{gauss(rng), gauss(rng)};
      u[n] = g / static_cast<double>(n);
      if (params.real_only) {
        u[-n] = std::conj(u[n]);
      } else {
        const cplx h{gauss(rng), gauss(rng)};
        u[-n] = h / static_cast<double>(n);
      }
    }
    values[static_cast<std::size_t>(k)] = momentum(u);
  });

  const double S = static_cast<double>(params.samples);
  double mean = 0.0, m2 = 0.0;
  for (double v : values) {
    mean += v;
    m2 += v * v;
  }
  mean /= S;
  m2 /= S;
  double var_p = 0.0, var_p2 = 0.0, max_abs = 0.0;
  for (double v : values) {
    var_p += (v - mean) * (v - mean);
    var_p2 += (v * v - m2) * (v * v - m2);
    max_abs = std::max(max_abs, std::abs(v));
  }
  var_p /= S - 1.0;
  var_p2 /= S - 1.0;
  const double se_mean = std::sqrt(var_p / S);
  const double se_m2 = std::sqrt(var_p2 / S);
  auto& hist = r.add_series("momentum_samples", "sample", "P");
  for (std::size_t k = 0; k < std::min<std::size_t>(values.size(), 1000); ++k) hist.points.emplace_back(k, values[k]);

  r.scalars["mean"] = mean;
  r.scalars["second_moment"] = m2;
  r.scalars["stderr_mean"] = se_mean;
  r.scalars["stderr_second_moment"] = se_m2;
  r.scalars["max_abs"] = max_abs;
  if (params.real_only) {
    r.add_verdict("momentum_identically_zero", max_abs == 0.0, max_abs, 0.0, "==");
    return r;
  }
  const double oracle = random_momentum_second_moment(N);
  r.scalars["analytic_second_moment"] = oracle;
  const double z2 = std::abs(m2 - oracle) / se_m2;
  const double z1 = std::abs(mean) / se_mean;
  r.add_verdict("second_moment_matches", z2 <= params.sigmas, z2, params.sigmas, "<=",
                "|m2 - 8 sum n^-2| in standard errors");
  r.add_verdict("mean_vanishes", z1 <= params.sigmas, z1, params.sigmas, "<=", "|mean| in standard errors");
  return r;
}

// ---------------------------------------------------------------------------

ExperimentReport exp_energy_drift(const EnergyDriftParams& params) {
  check_positive(params.T, "T");
  check_positive(params.dt, "dt");
  check_sign(params.sign);
  for (int N : params.schedule)
    if (N < 0 || N > params.modes) throw ConfigError("energy_drift: schedule entries must lie in [0, M]");
  ExperimentReport r;
  r.name = "energy_drift";
  r.parameters["ic"] = to_string(params.ic);
  r.parameters["schedule"] = join(params.schedule);
  r.parameters["sign"] = std::to_string(params.sign);
  r.parameters["noise_floor"] = format_double(params.noise_floor);
  r.parameters["slope_threshold_source"] = "chosen; the exponent epsilon is not quantified";
  echo_solver(r, params.T, params.dt, params.modes, params.sample_stride);
  const FourierState ic = make_initial_state(params.ic, params.modes);
  const Trajectory traj = solve_or_abort(r, "solve", ic, {Variant::mKdV2, params.sign}, params.T, params.dt,
                                         params.sample_stride);
  auto high_momentum = [](const FourierState& u, int N) { return momentum(u) - truncated_momentum(u, N); };
  auto& ds = r.add_series("drift", "N", "sup_t |P(P_>N u(t)) - P(P_>N u(0))|");
  std::vector<double> xs, ys;
  bool monotone = true;
  double previous = std::numeric_limits<double>::infinity();
  for (int N : params.schedule) {
    const double h0 = high_momentum(traj.states.front(), N);
    double drift = 0.0;
    for (const auto& slice : traj.states) drift = std::max(drift, std::abs(high_momentum(slice, N) - h0));
    ds.points.emplace_back(N, drift);
    if (drift > previous) monotone = false;
    previous = drift;
    if (drift > params.noise_floor && N > 0) {
      xs.push_back(std::log(static_cast<double>(N)));
      ys.push_back(std::log(drift));
    }
  }
  r.scalars["monotone_decreasing"] = monotone ? 1.0 : 0.0;
  if (xs.size() < 2) {
    r.add_verdict("drift_slope", true, 0.0, params.slope_max, "<=", "below noise");
    return r;
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) sxy += (xs[i] - mx) * (ys[i] - my), sxx += (xs[i] - mx) * (xs[i] - mx);
  const double slope = sxy / sxx;
  r.scalars["slope"] = slope;
  r.add_verdict("drift_slope", slope <= params.slope_max, slope, params.slope_max, "<=",
                "log-log fit over drifts above the noise floor; threshold is a lab choice, not a derived value");
  return r;
}

// ---------------------------------------------------------------------------

ExperimentReport exp_apriori_probe(const AprioriParams& params) {
  if (!(params.p >= 2.0) || std::isinf(params.p)) throw ConfigError("apriori: requires 2 <= p < infinity");
  if (!(params.s > 0.0 && params.s < 1.0 - 1.0 / params.p)) throw ConfigError("apriori: requires 0 < s < 1 - 1/p");
  if (params.amplitudes.empty()) throw ConfigError("apriori: amplitude list is empty");
  check_positive(params.T, "T");
  check_positive(params.dt, "dt");
  check_sign(params.sign);
  ExperimentReport r;
  r.name = "apriori_probe";
  r.parameters["s"] = format_double(params.s);
  r.parameters["p"] = format_double(params.p);
  r.parameters["equation"] = eq_text({params.variant, params.sign});
  r.parameters["ic"] = to_string(params.ic);
  r.parameters["amplitudes"] = join(params.amplitudes);
  echo_solver(r, params.T, params.dt, params.modes, params.sample_stride);
  const FourierState base = make_initial_state(params.ic, params.modes);
  auto& rs = r.add_series("ratio", "amplitude", "sup_t ||u(t)|| / ((1 + ||u0||)^{p/2-1} ||u0||)");
  std::vector<double> ratios;
  bool all_finished = true;
  double max_ratio = 0.0;
  for (double amp : params.amplitudes) {
    const FourierState ic = scaled(base, amp);
    const double n0 = fl_norm(ic, params.s, params.p);
    if (n0 == 0.0) {
      ratios.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    SolveOptions opts;
    opts.sample_stride = params.sample_stride;
    double sup = 0.0;
    try {
      const Trajectory traj = solve(ic, {params.variant, params.sign}, params.T, params.dt, opts);
      sup = sup_norm_over_time(traj, params.s, params.p);
    } catch (const SolverAbort& e) {
      all_finished = false;
      r.notes.push_back("amplitude " + format_double(amp) + " aborted: " + e.what());
      ratios.push_back(std::numeric_limits<double>::infinity());
      continue;
    }
    const double ratio = sup / (std::pow(1.0 + n0, params.p / 2.0 - 1.0) * n0);
    ratios.push_back(ratio);
    rs.points.emplace_back(amp, ratio);
    max_ratio = std::max(max_ratio, ratio);
  }
  r.scalars["max_ratio"] = max_ratio;
  r.add_verdict("all_members_finite", all_finished, all_finished ? 1.0 : 0.0, 1.0, "==");
  double worst_growth = 0.0;
  for (std::size_t i = 0; i + 1 < ratios.size(); ++i) {
    if (std::isfinite(ratios[i]) && std::isfinite(ratios[i + 1]) && ratios[i] > 0.0) {
      worst_growth = std::max(worst_growth, ratios[i + 1] / ratios[i]);
    } else if (std::isinf(ratios[i + 1])) {
      worst_growth = std::numeric_limits<double>::infinity();
    }
  }
  r.scalars["max_consecutive_growth"] = worst_growth;
  r.add_verdict("ratio_stable", worst_growth <= params.doubling_growth, worst_growth, params.doubling_growth, "<=",
                "ratio growth between consecutive amplitudes");
  return r;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::pair<double, double>, io::J1Sample>> multiplier_sweep(const MultiplierParams& params) {
  if (params.s_list.size() != params.p_list.size()) throw ConfigError("multiplier: s_list and p_list differ in length");
  std::vector<std::pair<std::pair<double, double>, io::J1Sample>> out;
  for (std::size_t i = 0; i < params.s_list.size(); ++i) {
    for (std::int64_t n : params.n_list) {
      for (std::int64_t K : params.K_list) {
        out.push_back({{params.s_list[i], params.p_list[i]},
                       io::J1Sample{n, K, j1_multiplier_sum(n, params.s_list[i], params.p_list[i], K)}});
      }
    }
  }
  return out;
}

ExperimentReport exp_multiplier_probe(const MultiplierParams& params) {
  for (double p : params.p_list)
    if (!(p >= 1.0)) throw ConfigError("multiplier: p must be >= 1");
  for (std::int64_t K : params.K_list)
    if (K < 0) throw ConfigError("multiplier: K must be non-negative");
  if (!std::is_sorted(params.K_list.begin(), params.K_list.end())) throw ConfigError("multiplier: K_list must increase");
  ExperimentReport r;
  r.name = "multiplier_probe";
  r.parameters["s_list"] = join(params.s_list);
  r.parameters["p_list"] = join(params.p_list);
  r.parameters["n_list"] = join(params.n_list);
  r.parameters["K_list"] = join(params.K_list);
  const auto sweep = multiplier_sweep(params);
  for (std::size_t i = 0; i < params.s_list.size(); ++i) {
    const double s = params.s_list[i], p = params.p_list[i];
    const std::string tag = "s" + format_double(s) + "_p" + format_double(p);
    double sup = 0.0, worst_change = 0.0;
    for (std::int64_t n : params.n_list) {
      auto& series = r.add_series("j1_" + tag + "_n" + std::to_string(n), "K", "J1 raw sum");
      for (const auto& [sp, sample] : sweep) {
        if (sp.first == s && sp.second == p && sample.n == n) series.points.emplace_back(sample.radius, sample.value);
      }
      if (series.points.empty()) continue;
      sup = std::max(sup, series.points.back().second);
      if (series.points.size() >= 2) {
        const double prev = series.points[series.points.size() - 2].second;
        const double last = series.points.back().second;
        const double change = prev > 0.0 ? (last - prev) / prev : (last > 0.0 ? 1.0 : 0.0);
        worst_change = std::max(worst_change, change);
      }
    }
    r.scalars["sup_n_" + tag] = sup;
    r.add_verdict("stabilized_" + tag, worst_change < params.stabilization, worst_change, params.stabilization, "<",
                  "max over n of the relative change across the last K doubling");
  }
  return r;
}

}  // namespace mkdv
