// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shapewalk/diffusivity.hpp"
#include "shapewalk/fields.hpp"
#include "shapewalk/hodge.hpp"
#include "shapewalk/potentials.hpp"
#include "shapewalk/remark_system.hpp"
#include "shapewalk/shape_graph.hpp"
#include "shapewalk/sim.hpp"

using namespace shapewalk;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Rational Q(long p, unsigned long q) { return fraction(p, q); }

std::size_t pow3(int e) {
  std::size_t out = 1;
  for (int i = 0; i < e; ++i) out *= 3;
  return out;
}

std::string k_tag(int k) { return " (K=" + std::to_string(k) + ")"; }

Outcome exact_diffusivity() {
  Outcome o;
  std::ostringstream os;
  for (int k = 1; k <= 8; ++k) {
    const DiffusivityReport r = sigma_squared_exact(k);
    if (r.sigma2 != Q(2, static_cast<unsigned long>(k + 2))) o.fail("sigma^2 = " + r.sigma2.get_str() + k_tag(k));
    if (r.a_norm2 != 1) o.fail("<A,A> != 1" + k_tag(k));
    os << (k > 1 ? " " : "") << r.sigma2.get_str();
  }
  if (o.ok) o.detail = "sigma^2 for K=1..8: " + os.str();
  return o;
}

Outcome closed_form_agreement() {
  Outcome o;
  for (int k = 1; k <= 8; ++k) {
    const ShapeGraph g = build_graph(k);
    const auto h = hodge_decompose(g, field_A<Rational>(g));
    if (!(h.potential == closed_form_potential(k))) o.fail("potential differs from closed form" + k_tag(k));
    const auto div = divergence(field_A<Rational>(g) - h.gradient);
    for (const Rational& d : div.values()) {
      if (d != 0) o.fail("div(A - grad f) != 0" + k_tag(k));
    }
  }
  if (o.ok) o.detail = "K=1..8, all vertices";
  return o;
}

Outcome remark_system_check() {
  Outcome o;
  for (int k = 1; k <= 10; ++k) {
    const auto f = solve_remark_system(remark_system(k));
    for (int j = 1; j <= k; ++j) {
      const Rational want = Q(3 + 2 * (k - j), static_cast<unsigned long>(k + 2));
      if (f[static_cast<std::size_t>(j - 1)] != want) o.fail("F_" + std::to_string(j) + " wrong" + k_tag(k));
    }
  }
  for (int k = 1; k <= 8; ++k) {
    const ShapeGraph g = build_graph(k);
    const auto a = field_A<Rational>(g);
    const auto b = a - hodge_decompose(g, a).gradient;
    for (int i = 0; i < k; ++i) {
      if (flux(b, digit_facet(k, i, 1), digit_facet(k, i, -1)) != 0) o.fail("J(M_i, N_i) != 0" + k_tag(k));
    }
  }
  if (o.ok) o.detail = "F_j exact for K=1..10, facet flux 0 for K=1..8";
  return o;
}

Outcome structural_counts() {
  Outcome o;
  for (int k = 1; k <= 10; ++k) {
    const ShapeGraph g = build_graph(k);
    if (g.total_directed_edges() != 2 * pow3(k)) o.fail("|E_K| != 2*3^K" + k_tag(k));
    if (g.crossing_count() != pow3(k - 1)) o.fail("crossing count != 3^(K-1)" + k_tag(k));
    if (g.degree(Shape::all_ones(k).mask()) != static_cast<std::size_t>(k + 2)) o.fail("all-ones degree" + k_tag(k));
    if (!(build_graph_inductive(k) == g)) o.fail("inductive != direct" + k_tag(k));
    if (k <= 5 && oracle::all_edges(k).size() != g.total_directed_edges()) o.fail("oracle edge count" + k_tag(k));
  }
  if (o.ok) o.detail = "K=1..10";
  return o;
}

Outcome identity_suite() {
  Outcome o;
  for (int k = 1; k <= 7; ++k) {
    const ShapeGraph g = build_graph(k);
    const BasePotentials lo = base_potentials(k);
    const BasePotentials hi = base_potentials(k + 1);
    const auto div_f1 = divergence(gradient(g, lo.f1));
    const auto div_f2 = divergence(gradient(g, lo.f2));
    const auto phi = phi_profiles(g);
    const auto phi_closed = phi_profiles_closed_form(g);
    for (const Shape& a : g.vertices()) {
      const DegreeProfile p = degree_profile(g, a);
      if (div_f1.at(a) != -2 * (p.alpha_odd() - p.alpha_bar_odd())) o.fail("div grad f1" + k_tag(k));
      if (div_f2.at(a) != -(k + 2) * (p.alpha_even() - p.alpha_bar_even())) o.fail("div grad f2" + k_tag(k));
      if (p.alpha[1] + p.alpha_bar[1] != k) o.fail("alpha_1 + alpha_bar_1 != K" + k_tag(k));
      if (hi.f2.at(a.prepend(1)) != lo.f2.at(a) + p.alpha_bar[1]) o.fail("f2(1a)" + k_tag(k));
      if (hi.f2.at(a.prepend(-1)) != lo.f2.at(a) - p.alpha[1]) o.fail("f2(-1a)" + k_tag(k));
      if (phi.phi.at(a) != phi_closed.phi.at(a) || phi.phi_bar.at(a) != phi_closed.phi_bar.at(a)) {
        o.fail("phi profiles" + k_tag(k));
      }
      if (phi.phi.at(a) + phi.phi_bar.at(a) != div_f2.at(a)) o.fail("phi + phi_bar != div grad f2" + k_tag(k));
    }
  }
  if (o.ok) o.detail = "K=1..7, all vertices";
  return o;
}

Outcome kernel_equivalence() {
  Outcome o;
  for (int k = 1; k <= 4; ++k) {
    const auto w = transition_kernel(k, Representation::walker);
    const auto g = transition_kernel(k, Representation::graph);
    if (!(w == g)) o.fail("kernels differ" + k_tag(k));
    for (std::uint32_t v = 0; v < (1u << k); ++v) {
      if (w.row_sum(Shape::from_mask(k, v)) != 1) o.fail("row sum != 1" + k_tag(k));
    }
  }
  if (o.ok) o.detail = "K=1..4";
  return o;
}

Outcome two_step_moment() {
  Outcome o;
  const Rational oracle_value = oracle::path_second_moment(1, 2);
  if (oracle_value != Q(16, 9)) o.fail("enumeration gives " + oracle_value.get_str());
  const ShapeGraph g = build_graph(1);
  const SimEstimate e = estimate_sigma2(g, 2, 1000000, 20240607);
  const double mean = 2.0 * e.point_estimate;
  const double se = 2.0 * e.std_error;
  const double z = (mean - oracle_value.get_d()) / se;
  std::ostringstream os;
  os << "E[(Z2-Z0)^2] = " << mean << " +- " << se << ", oracle 16/9, z = " << z;
  if (std::abs(z) > 4.0) o.fail(os.str());
  if (o.ok) o.detail = os.str();
  return o;
}

// Returns the number of cells outside 3 standard errors.
int monte_carlo_round(std::uint64_t seed, std::ostringstream& os) {
  int misses = 0;
  for (int k : {1, 2, 3, 10}) {
    const SimEstimate e = estimate_sigma2(k, 10000, 10000, seed);
    const double target = 2.0 / (k + 2);
    const double z = (e.point_estimate - target) / e.std_error;
    if (std::abs(z) > 3.0) ++misses;
    os << " K=" << k << ":" << e.point_estimate << "(z=" << z << ")";
  }
  return misses;
}

Outcome monte_carlo() {
  Outcome o;
  std::ostringstream os;
  os << "seed 1:";
  const int first = monte_carlo_round(1, os);
  if (first == 1) {
    os << "; seed 2:";
    if (monte_carlo_round(2, os) != 0) o.fail(os.str());
  } else if (first > 1) {
    o.fail(os.str());
  }
  if (o.ok) o.detail = os.str();
  return o;
}

Outcome martingale() {
  Outcome o;
  for (int k = 1; k <= 8; ++k) {
    const ShapeGraph g = build_graph(k);
    const auto f = hodge_decompose(g, field_A<Rational>(g)).potential;
    if (!(martingale_residuals(g, f) == Potential<Rational>::constant(k, 0))) o.fail("(div B)/deg != 0" + k_tag(k));
  }
  double worst = 0.0;
  for (int k = 1; k <= 3; ++k) {
    const ShapeGraph g = build_graph(k);
    const auto f = to_float(hodge_decompose(g, field_A<Rational>(g)).potential);
    const auto stats = martingale_increment_stats(g, f, 100000, 777 + static_cast<std::uint64_t>(k));
    for (const IncrementStats& s : stats) {
      if (s.count < 2 || s.std_error == 0.0) {
        if (s.mean != 0.0) o.fail("degenerate shape with nonzero mean" + k_tag(k));
        continue;
      }
      const double z = std::abs(s.mean) / s.std_error;
      worst = std::max(worst, z);
      if (z > 4.0) o.fail("increment mean beyond 4 SE" + k_tag(k));
    }
  }
  if (o.ok) {
    std::ostringstream os;
    os << "exact for K=1..8; empirical max |z| = " << worst << " for K=1..3";
    o.detail = os.str();
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exact diffusivity", 60, exact_diffusivity},
      {2, "closed-form agreement", 60, closed_form_agreement},
      {3, "facet flux system", 0, remark_system_check},
      {4, "structural counts", 0, structural_counts},
      {5, "identity suite", 0, identity_suite},
      {6, "kernel equivalence", 0, kernel_equivalence},
      {7, "small-n exact moment", 30, two_step_moment},
      {8, "Monte Carlo diffusivity", 600, monte_carlo},
      {9, "martingale check", 0, martingale},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    if (!o.ok) ++failures;
    std::printf("criterion %d %-24s %s  [%.2fs] %s\n", c.id, c.name, o.ok ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria FAILED");
  return failures == 0 ? 0 : 1;
}
