// Gauge functions alpha(u), magnetic fields b(u), flux f(u) and the
// superpotential W(u) = -lambda/sinh u + alpha(u) for every field case.
//
// Two flux notions are exposed on purpose: the circulation of the vector
// potential around the latitude circle, f(u) = alpha(u) sinh u, and the
// genuine surface integral of b(u) sinh u from the pole.  Their difference is
// u-independent for the closed cases and measures the singular flux string a
// singular gauge carries at u = 0.

#pragma once

#include <functional>
#include <iosfwd>
#include <memory>

#include "hyperlandau/model.hpp"

namespace hyperlandau {

// Monotone (Fritsch-Carlson) cubic Hermite interpolant; used for tabulated
// gauges so the numeric engine sees a C1 curve without spurious overshoot.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);
  double operator()(double x) const;
  double derivative(double x) const;
  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

 private:
  std::size_t interval(double x) const;
  std::vector<double> x_, y_, slope_;
};

class GaugeFunction {
 public:
  explicit GaugeFunction(FieldCase c);

  // Two-column CSV with header line "u,alpha", strictly increasing u.
  static GaugeFunction from_csv(std::istream& in);

  const FieldCase& field_case() const { return case_; }

  double alpha(double u) const;        // throws DomainError for u <= 0
  double alpha_prime(double u) const;  // d alpha / du
  double magnetic_field(double u) const;
  double flux_in_quanta(double u) const;  // alpha(u) sinh u
  double flux_surface(double u) const;    // int_0^u b sinh du'

  // Asymptotic data used by admissibility analysis and flux bookkeeping.
  double origin_pole_strength() const;   // p in alpha ~ p/u for u -> 0
  double alpha_at_infinity() const;      // lim alpha (tabulated: last sample)
  double flux_string() const;            // lim_{u->0+} alpha(u) sinh u

  // Antiderivative of alpha, exact for the closed cases, adaptive Simpson
  // from u_ref = 1 for tabulated gauges.  Only differences matter (the zero
  // mode's normalization is free).
  double integral_alpha(double u) const;

 private:
  FieldCase case_;
  std::shared_ptr<const MonotoneCubic> interp_;  // tabulated only
};

// Operation-style wrappers.
double alpha(const GaugeFunction& g, double u);
double magnetic_field(const GaugeFunction& g, double u);
double flux_in_quanta(const GaugeFunction& g, double u);
double flux_surface(const GaugeFunction& g, double u);
double superpotential(const GaugeFunction& g, const AngularMomentum& l,
                      double u);

class Superpotential {
 public:
  Superpotential(GaugeFunction gauge, AngularMomentum lambda)
      : gauge_(std::move(gauge)), lambda_(lambda) {}

  double operator()(double u) const;
  double derivative(double u) const;
  double asymptotic_value() const;  // lim_{u->inf} W(u)

  const GaugeFunction& gauge() const { return gauge_; }
  const AngularMomentum& lambda() const { return lambda_; }

 private:
  GaugeFunction gauge_;
  AngularMomentum lambda_;
};

// Adaptive Simpson quadrature (utility shared with the zero-mode routines).
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12);

}  // namespace hyperlandau
