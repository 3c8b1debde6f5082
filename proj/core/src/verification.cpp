#include "shapewalk/verification.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "shapewalk/diffusivity.hpp"
#include "shapewalk/errors.hpp"
#include "shapewalk/hodge.hpp"
#include "shapewalk/potentials.hpp"
#include "shapewalk/remark_system.hpp"
#include "shapewalk/sim.hpp"

namespace shapewalk {
namespace {

// Graphs and exact decompositions of A, built once per order.
class Workspace {
 public:
  const ShapeGraph& graph(int k) {
    auto& slot = graphs_[k];
    if (!slot) slot = std::make_unique<ShapeGraph>(build_graph(k));
    return *slot;
  }

  const HodgeDecomposition<Rational>& hodge(int k) {
    auto& slot = hodge_[k];
    if (!slot) {
      const ShapeGraph& g = graph(k);
      slot = std::make_unique<HodgeDecomposition<Rational>>(hodge_decompose(g, field_A<Rational>(g)));
    }
    return *slot;
  }

 private:
  std::map<int, std::unique_ptr<ShapeGraph>> graphs_;
  std::map<int, std::unique_ptr<HodgeDecomposition<Rational>>> hodge_;
};

std::int64_t pow3(int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= 3;
  return out;
}

// Runs `body` for K = 1..bound; the first failure message is reported.
CheckResult check(std::string name, int bound, const std::function<std::string(int)>& body) {
  CheckResult r{std::move(name), true, ""};
  for (int k = 1; k <= bound; ++k) {
    try {
      std::string failure = body(k);
      if (!failure.empty()) {
        r.passed = false;
        r.detail = "K=" + std::to_string(k) + ": " + failure;
        return r;
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = "K=" + std::to_string(k) + ": exception: " + e.what();
      return r;
    }
  }
  r.detail = "K=1.." + std::to_string(bound);
  return r;
}

bool all_zero(const Potential<Rational>& p) {
  for (const Rational& v : p.values()) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const int kmax = options.k_max;
  auto bound = [kmax](int cap) { return std::min(kmax, cap); };
  Workspace ws;
  std::vector<CheckResult> out;

  out.push_back(check("graph.edge_counts", bound(10), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    if (static_cast<std::int64_t>(g.total_directed_edges()) != 2 * pow3(k)) return "D_K != 2*3^K";
    if (static_cast<std::int64_t>(g.crossing_count()) != pow3(k - 1)) return "delta_K != 3^(K-1)";
    if (g.degree(Shape::all_ones(k).mask()) != static_cast<std::size_t>(k + 2)) {
      return "all-ones degree != K+2";
    }
    return "";
  }));

  out.push_back(check("graph.inductive_equals_direct", bound(10), [&](int k) -> std::string {
    return build_graph_inductive(k) == ws.graph(k) ? "" : "constructions differ";
  }));

  out.push_back(check("graph.edge_sign_consistency", bound(8), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    for (const Shape& a : g.vertices()) {
      std::map<std::uint32_t, int> moves;
      int loops_plus = 0, loops_minus = 0;
      for (const EdgeRecord& e : g.out_edges(a.mask())) {
        if (e.loop) {
          (e.a_value > 0 ? loops_plus : loops_minus) += 1;
        } else {
          moves[e.head] = e.a_value;
        }
      }
      if (loops_plus != 1 || loops_minus != 1) return "vertex without exactly one loop of each sign";
      for (const Shape& b : g.vertices()) {
        if (a == b) continue;
        const auto s = edge_sign(a, b);
        const auto back = edge_sign(b, a);
        if (s.has_value() != back.has_value() || (s && *s != -*back)) return "edge_sign not antisymmetric";
        const auto it = moves.find(b.mask());
        if (s.has_value() != (it != moves.end()) || (s && *s != it->second)) {
          return "adjacency disagrees with edge_sign";
        }
      }
    }
    return "";
  }));

  out.push_back(check("graph.degree_profiles", bound(10), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    std::int64_t handshake = 0;
    for (const Shape& a : g.vertices()) {
      const DegreeProfile p = degree_profile(g, a);
      handshake += p.alpha_total() + p.alpha_bar_total();
      if (p.alpha[0] != 1 || p.alpha_bar[0] != 1) return "alpha_0 or alpha_bar_0 != 1";
      if (p.alpha[1] + p.alpha_bar[1] != k) return "alpha_1 + alpha_bar_1 != K";
      if (p.alpha[1] != a.count_plus()) return "alpha_1 != number of +1 digits";
    }
    return handshake == 2 * pow3(k) ? "" : "sum of degrees != 2*3^K";
  }));

  out.push_back(check("fields.hodge_identities", bound(8), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    const auto& h = ws.hodge(k);
    if (!(h.gradient + h.divergence_free == field_A<Rational>(g))) return "A != grad f + B";
    if (!all_zero(divergence(h.divergence_free))) return "div B != 0";
    if (sgn(inner_product(h.gradient, h.divergence_free)) != 0) return "<grad f, B> != 0";
    return "";
  }));

  out.push_back(check("fields.gauge_independence", bound(8), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    const auto& h = ws.hodge(k);
    const auto shifted = gradient(g, h.potential.shifted(Rational(7, 3)));
    if (!(shifted == h.gradient)) return "gradient changed under a constant shift";
    if (!all_zero(martingale_residuals(g, h.potential.shifted(Rational(-5))))) {
      return "residuals changed under a constant shift";
    }
    return "";
  }));

  out.push_back(check("fields.closed_form_potential", bound(8), [&](int k) -> std::string {
    if (!(ws.hodge(k).potential == closed_form_potential(k))) return "Hodge potential != closed form";
    if (!(base_potentials(k).f == closed_form_potential(k))) return "f from f1, f2 != closed form";
    return "";
  }));

  out.push_back(check("fields.div_grad_f1_f2", bound(8), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    const BasePotentials base = base_potentials(k);
    const auto d1 = divergence(gradient(g, base.f1));
    const auto d2 = divergence(gradient(g, base.f2));
    for (const Shape& a : g.vertices()) {
      const DegreeProfile p = degree_profile(g, a);
      if (d1.at(a) != -2 * (p.alpha_odd() - p.alpha_bar_odd())) return "div grad f1 identity fails";
      if (d2.at(a) != -(k + 2) * (p.alpha_even() - p.alpha_bar_even())) return "div grad f2 identity fails";
    }
    return "";
  }));

  out.push_back(check("fields.phi_profiles", bound(8), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    const PhiProfiles direct = phi_profiles(g);
    const PhiProfiles closed = phi_profiles_closed_form(g);
    if (!(direct.phi == closed.phi)) return "phi closed form fails";
    if (!(direct.phi_bar == closed.phi_bar)) return "phi_bar closed form fails";
    return "";
  }));

  out.push_back(check("fields.f2_profile", bound(6), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    const BasePotentials base = base_potentials(k);
    for (const Shape& a : g.vertices()) {
      const DegreeProfile p = degree_profile(g, a);
      const int alpha2 = k >= 2 ? p.alpha[2] - p.alpha_bar[2] : 0;
      if (base.f2.at(a) != alpha2) return "f2 != alpha_2 - alpha_bar_2";
    }
    return "";
  }));

  out.push_back(check("fields.recurrences", bound(7), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    const BasePotentials lo = base_potentials(k);
    const BasePotentials hi = base_potentials(k + 1);
    for (const Shape& a : g.vertices()) {
      const DegreeProfile p = degree_profile(g, a);
      const Shape up = a.prepend(1);
      const Shape down = a.prepend(-1);
      if (hi.f1.at(up) != lo.f1.at(a) + 1 || hi.f1.at(down) != lo.f1.at(a) - 1) return "f1 recurrence fails";
      if (hi.f2.at(up) != lo.f2.at(a) + p.alpha_bar[1]) return "f2(1a) recurrence fails";
      if (hi.f2.at(down) != lo.f2.at(a) - p.alpha[1]) return "f2(-1a) recurrence fails";
    }
    return "";
  }));

  out.push_back(check("fields.remark_system", bound(10), [&](int k) -> std::string {
    const auto f = solve_remark_system(remark_system(k));
    for (int j = 1; j <= k; ++j) {
      if (f[static_cast<std::size_t>(j - 1)] != closed_form_increment(k, j)) return "F_j mismatch";
    }
    return "";
  }));

  out.push_back(check("fields.remark_flux", bound(8), [&](int k) -> std::string {
    const auto& b = ws.hodge(k).divergence_free;
    for (int i = 0; i < k; ++i) {
      if (sgn(flux(b, digit_facet(k, i, 1), digit_facet(k, i, -1))) != 0) return "J_{M_i,N_i} != 0";
    }
    return "";
  }));

  out.push_back(check("fields.flux_cuts", bound(8), [&](int k) -> std::string {
    const auto& b = ws.hodge(k).divergence_free;
    RandomStream rng = RandomStream::derive(options.seed, static_cast<std::uint64_t>(k));
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Shape> subset;
      for (std::uint32_t v = 0; v < (1u << k); ++v) {
        if (rng.below(2) == 1) subset.push_back(Shape::from_mask(k, v));
      }
      if (sgn(flux(b, subset, complement(k, subset))) != 0) return "nonzero flux across a cut";
    }
    return "";
  }));

  out.push_back(check("fields.stationarity", bound(8), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    const auto& h = ws.hodge(k);
    if (!is_stationary(field_A<Rational>(g))) return "A not stationary";
    if (!is_stationary(h.gradient)) return "grad f not stationary";
    if (!is_stationary(h.divergence_free)) return "B not stationary";
    return "";
  }));

  out.push_back(check("fields.facet_decomposition", bound(8), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    return positive_edge_average(ws.hodge(k).gradient) == facet_decomposition_value(g)
               ? ""
               : "facet formula differs from direct summation";
  }));

  out.push_back(check("fields.float_exact_agreement", bound(8), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    const auto fl = hodge_decompose(g, field_A<double>(g));
    const auto& ex = ws.hodge(k);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      if (!scalar_equal(fl.potential[v], ex.potential[v].get_d())) return "potential differs";
    }
    const auto b = ex.divergence_free.canonical_values();
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!scalar_equal(fl.divergence_free.canonical(i), b[i].get_d())) return "B differs";
    }
    return "";
  }));

  out.push_back(check("fields.sigma_exact", bound(8), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    const auto& h = ws.hodge(k);
    const auto a = field_A<Rational>(g);
    if (inner_product(a, a) != 1) return "<A,A> != 1";
    const Rational sigma2 = 1 - inner_product(a, h.gradient);
    if (sigma2 != sigma_squared_closed_form(k)) return "sigma^2 != 2/(K+2)";
    if (inner_product(a, h.gradient) != fraction(k, static_cast<unsigned long>(k + 2))) return "<A, grad f> != K/(K+2)";
    if (inner_product(h.divergence_free, h.divergence_free) != sigma2) return "||B||^2 != sigma^2";
    return "";
  }));

  out.push_back(check("sim.kernel_equivalence", bound(4), [&](int k) -> std::string {
    const auto walker = transition_kernel(k, Representation::walker);
    const auto graph = transition_kernel(k, Representation::graph);
    if (!(walker == graph)) return "walker and graph kernels differ";
    for (std::uint32_t v = 0; v < (1u << k); ++v) {
      if (walker.row_sum(Shape::from_mask(k, v)) != 1) return "row does not sum to 1";
    }
    return "";
  }));

  out.push_back(check("sim.stationary_law", bound(4), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    const StationarySampler sampler(g);
    const auto kernel = transition_kernel(k, Representation::walker);
    std::vector<Rational> pushed(g.vertex_count(), Rational(0));
    for (const auto& [key, p] : kernel.entries) pushed[key.to] += sampler.probability(key.from) * p;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      if (pushed[v] != sampler.probability(v)) return "degree law not invariant";
      const Rational edge_mass = sampler.probability(v) / Rational(static_cast<long>(g.degree(v)));
      if (edge_mass != Rational(1, static_cast<unsigned long>(g.total_directed_edges()))) {
        return "traversed edge not uniform on E_K";
      }
    }
    return "";
  }));

  out.push_back(check("sim.martingale_exact", bound(8), [&](int k) -> std::string {
    return all_zero(martingale_residuals(ws.graph(k), ws.hodge(k).potential)) ? ""
                                                                               : "nonzero mean of B";
  }));

  out.push_back(check("sim.martingale_empirical", bound(3), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    const auto stats = martingale_increment_stats(g, to_float(ws.hodge(k).potential), 100000,
                                                  options.seed + static_cast<std::uint64_t>(k));
    for (const IncrementStats& s : stats) {
      if (s.count < 2) return "shape not visited";
      if (std::abs(s.mean) > 4.0 * s.std_error) return "conditional mean beyond 4 standard errors";
    }
    return "";
  }));

  out.push_back(check("sim.quadratic_variation", bound(8), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    const auto& b = ws.hodge(k).divergence_free;
    const StationarySampler sampler(g);
    Rational mean_square = 0;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      Rational local = 0;
      for (const EdgeRecord& e : g.out_edges(v)) {
        const Rational x = b.value(e);
        local += x * x;
      }
      mean_square += sampler.probability(v) * local / Rational(static_cast<long>(g.degree(v)));
    }
    return mean_square == sigma_squared_closed_form(k) ? "" : "E_mu[B^2] != sigma^2";
  }));

  out.push_back(check("sim.two_step_moment", bound(1), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    const Rational exact = exact_displacement_second_moment(g, 2);
    if (exact != Rational(16, 9)) return "exact two-step moment != 16/9";
    const SimEstimate est = estimate_sigma2(g, 2, 200000, options.seed);
    const double moment = 2.0 * est.point_estimate;
    return std::abs(moment - exact.get_d()) <= 4.0 * 2.0 * est.std_error ? ""
                                                                          : "empirical moment beyond 4 SE";
  }));

  out.push_back(check("sim.translation_invariance", bound(4), [&](int k) -> std::string {
    const ShapeGraph& g = ws.graph(k);
    const WalkerState start = walker_from_shape(Shape::all_ones(k));
    WalkerState shifted = start;
    for (auto& h : shifted.heights) h += 17;
    RandomStream r1(options.seed), r2(options.seed);
    const auto p1 = simulate_walker(g, start, 500, r1);
    const auto p2 = simulate_walker(g, shifted, 500, r2);
    for (std::size_t i = 0; i < p1.size(); ++i) {
      if (!in_state_space(p1[i])) return "walker left S_K";
      if (p2[i].heights.front() != p1[i].heights.front() + 17) return "shift not preserved";
      if (shape_of(p1[i]) != shape_of(p2[i])) return "shapes differ";
    }
    return "";
  }));

  out.push_back(check("sim.monte_carlo_sigma", bound(3), [&](int k) -> std::string {
    const SimEstimate est = estimate_sigma2(ws.graph(k), 1000, 4000, options.seed);
    const double target = sigma_squared_closed_form(k).get_d();
    if (std::abs(est.point_estimate - target) > 4.0 * est.std_error) {
      std::ostringstream os;
      os << "estimate " << est.point_estimate << " +- " << est.std_error << " vs " << target;
      return os.str();
    }
    return "";
  }));

  return out;
}

}  // namespace shapewalk
