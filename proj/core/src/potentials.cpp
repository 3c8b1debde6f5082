#include "shapewalk/potentials.hpp"

#include "shapewalk/errors.hpp"

namespace shapewalk {

Rational closed_form_increment(int order, int position) {
  if (order < 1) throw DimensionError("order must be positive");
  if (position < 1 || position > order) throw DimensionError("digit position must be in [1, K]");
  Rational out(3 + 2 * (order - position), order + 2);
  out.canonicalize();
  return out;
}

Potential<Rational> closed_form_potential(int order) {
  check_order(order);
  std::vector<Rational> increments;
  for (int i = 1; i <= order; ++i) increments.push_back(closed_form_increment(order, i));

  std::vector<Rational> values(std::size_t{1} << order);
  for (std::uint32_t v = 0; v < values.size(); ++v) {
    Rational sum = 0;
    for (int i = 0; i < order; ++i) {
      if (((v >> i) & 1u) == 0) sum += increments[static_cast<std::size_t>(i)];
    }
    values[v] = sum;
  }
  return Potential<Rational>(order, std::move(values));
}

BasePotentials base_potentials(int order) {
  check_order(order);
  const std::size_t n = std::size_t{1} << order;
  std::vector<Rational> f1(n), f2(n), f(n);
  const Rational half(1, 2);
  const Rational inverse_k2(1, order + 2);
  for (std::uint32_t v = 0; v < n; ++v) {
    long s1 = 0;
    long s2 = 0;
    for (int i = 1; i <= order; ++i) {
      const long digit = ((v >> (i - 1)) & 1u) ? 1 : -1;
      s1 += digit;
      s2 += digit * (1 + order - 2 * i);
    }
    f1[v] = s1;
    f2[v] = Rational(s2, 2);
    f2[v].canonicalize();
    f[v] = -(half * f1[v] + inverse_k2 * f2[v]) + Rational(order, 2);
    f[v].canonicalize();
  }
  return {Potential<Rational>(order, std::move(f1)), Potential<Rational>(order, std::move(f2)),
          Potential<Rational>(order, std::move(f))};
}

PhiProfiles phi_profiles(const ShapeGraph& g) {
  const Potential<Rational> f2 = base_potentials(g.order()).f2;
  std::vector<Rational> phi(g.vertex_count()), phi_bar(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    for (const EdgeRecord& e : g.out_edges(v)) {
      (e.a_value > 0 ? phi : phi_bar)[v] += f2[e.head] - f2[v];
    }
  }
  return {Potential<Rational>(g.order(), std::move(phi)),
          Potential<Rational>(g.order(), std::move(phi_bar))};
}

PhiProfiles phi_profiles_closed_form(const ShapeGraph& g) {
  const long k1 = g.order() + 1;
  std::vector<Rational> phi(g.vertex_count()), phi_bar(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    const DegreeProfile p = degree_profile(g, g.shape(v));
    phi[v] = p.alpha_bar_even() - k1 * p.alpha_even() + p.alpha_odd() + p.alpha_bar_odd();
    phi_bar[v] = -p.alpha_even() + k1 * p.alpha_bar_even() - p.alpha_bar_odd() - p.alpha_odd();
  }
  return {Potential<Rational>(g.order(), std::move(phi)),
          Potential<Rational>(g.order(), std::move(phi_bar))};
}

}  // namespace shapewalk
