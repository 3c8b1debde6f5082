#pragma once

#include "shapewalk/fields.hpp"

namespace shapewalk {

/// F_i^K = (3 + 2(K - i)) / (K + 2), for digit positions i = 1..K.
Rational closed_form_increment(int order, int position);

/// f(a) = sum of F_i^K over the digits i with a_i = -1; f(all-ones) = 0.
Potential<Rational> closed_form_potential(int order);

struct BasePotentials {
  /// f1(a) = sum_i a_i
  Potential<Rational> f1;
  /// f2(a) = (1/2) sum_i a_i (1 + K - 2i)
  Potential<Rational> f2;
  /// f = -(f1/2 + f2/(K+2)) + K/2
  Potential<Rational> f;
};

BasePotentials base_potentials(int order);

/// phi(a) and phi_bar(a): the E^+ and E^- parts of div(grad f2) at a.
struct PhiProfiles {
  Potential<Rational> phi;
  Potential<Rational> phi_bar;
};

/// Direct summation of f2(b) - f2(a) over E^+ (phi) and E^- (phi_bar) out-edges.
PhiProfiles phi_profiles(const ShapeGraph& g);

/// The same profiles from the digit-count closed forms:
///   phi     = abar_ev - (K+1) a_ev + a_od + abar_od
///   phi_bar = -a_ev + (K+1) abar_ev - abar_od - a_od
PhiProfiles phi_profiles_closed_form(const ShapeGraph& g);

}  // namespace shapewalk
