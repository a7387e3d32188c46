// Closed-form SUSY machinery: partner potentials, exact spectra,
// Jacobi-polynomial eigenfunctions, zero modes, degeneracy and the
// finite-flux analysis.
//
// Level indexing convention: n labels Dirac levels (n = 0 is the zero mode).
// The spinor of level n >= 1 combines the pair (g1_n, g2_{n-1}); asking for
// Component::g2 of level n therefore returns the partner function one rung
// down, and level 0 has no partner component at all.

#pragma once

#include <array>
#include <complex>
#include <functional>
#include <optional>

#include "hyperlandau/fields.hpp"
#include "hyperlandau/model.hpp"

namespace hyperlandau {

// ---------------------------------------------------------------------------
// Jacobi polynomials
// ---------------------------------------------------------------------------

// P_n^{(a,b)}(w) by the standard three-term recurrence, treated as a formal
// polynomial family for arbitrary real a, b (no a,b > -1 restriction: the
// eigenfunction parameters below routinely leave the classical range, and
// correctness is certified by operator residuals instead of orthogonality).
// Throws DegenerateParameters when a recurrence denominator vanishes exactly.
double jacobi(int n, double a, double b, double w);

// dP_n^{(a,b)}/dw = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}(w); returns 0 for n = 0.
double jacobi_derivative(int n, double a, double b, double w);

// ---------------------------------------------------------------------------
// Partner potentials
// ---------------------------------------------------------------------------

struct PartnerPotentials {
  std::function<double(double)> V1;  // W^2 - W'
  std::function<double(double)> V2;  // W^2 + W'
  double asymptotic_value = 0.0;     // lim_{u->inf} W^2 (continuum threshold)
  // True when the potential extends smoothly and evenly through u = 0
  // (Poschl-Teller family at lambda = lambda', D = 0); the numeric engine
  // then discretizes the reflection-symmetric whole-line problem.
  bool whole_line = false;
};

PartnerPotentials partner_potentials(const Superpotential& W);

// Case (i) only: defect of V2(u; A0+1) - V1(u; A0) - (2 A0 + 1), which
// vanishes identically for shape-invariant partners.
double shape_invariance_residual(const FieldCase& c, const AngularMomentum& l,
                                 double u);

// ---------------------------------------------------------------------------
// Spectra
// ---------------------------------------------------------------------------

struct SpectrumResult {
  std::vector<SpectrumEntry> bound;          // n = 0 zero mode first
  std::optional<SpectrumEntry> threshold;    // state exactly at the continuum
  double continuum_threshold = 0.0;          // lim W^2
};

// Analytic spectrum.  Throws AnalyticUnavailable outside the solvable point
// (lambda != lambda', nonzero D2/D3), NoBoundStates for inadmissible
// parameters, UnsupportedCase for tabulated gauges.
SpectrumResult spectrum(const FieldCase& c, const AngularMomentum& l,
                        double R = 1.0);

// ---------------------------------------------------------------------------
// Eigenfunctions
// ---------------------------------------------------------------------------

enum class Component { g1, g2 };
enum class VariableMap { cosh_u, coth_u, tanh_u };

// Closed-form descriptor: value = |w-1|^exp_minus * (w+1)^exp_plus *
// P_degree^{(jacobi_a, jacobi_b)}(w(u)), with w(u) given by `map`.
struct EigenfunctionForm {
  VariableMap map;
  double exp_minus;
  double exp_plus;
  int degree;
  double jacobi_a;
  double jacobi_b;
};

EigenfunctionForm eigenfunction_form(const FieldCase& c,
                                     const AngularMomentum& l, int n,
                                     Component comp);

// Unnormalized closed-form value / exact u-derivative of the level-n
// eigenfunction component.  Throws IndexError outside the bound range
// (Component::g2 additionally requires n >= 1).
double eigenfunction_value(const FieldCase& c, const AngularMomentum& l, int n,
                           Component comp, double u);
double eigenfunction_derivative(const FieldCase& c, const AngularMomentum& l,
                                int n, Component comp, double u);

// Companion normalized variant: samples on the grid and divides by
// sqrt(int g^2 du) (composite Simpson on that grid).
SampledFunction eigenfunction_normalized(const FieldCase& c,
                                         const AngularMomentum& l, int n,
                                         Component comp, const RadialGrid& g);

// ---------------------------------------------------------------------------
// Zero modes, degeneracy, flux
// ---------------------------------------------------------------------------

// g_{1,0}(u) = (tanh u/2)^lambda exp(-int alpha du), overall normalization
// free (closed antiderivatives for the analytic cases, adaptive quadrature
// from u_ref = 1 for tabulated gauges).
double zero_mode(const GaugeFunction& g, const AngularMomentum& l, double u);

struct ZeroModeReport {
  ZeroModeVerdict verdict;
  double origin_power;    // g ~ u^origin_power for u -> 0
  double decay_exponent;  // g ~ exp(-decay_exponent * u) for u -> inf
};

ZeroModeReport zero_mode_admissible(const GaugeFunction& g,
                                    const AngularMomentum& l);

// All strict half-odd lambda with |2 lambda| <= two_lambda_max that admit the
// zero mode: a finite window onto an infinite set.
std::vector<AngularMomentum> degenerate_lambdas(const FieldCase& c,
                                                int two_lambda_max);

// For a compact-support field of total flux Phi0 = total_flux_quanta * phi0:
// the zero-mode tail is (tanh u/2)^(lambda - total_flux_quanta), which tends
// to a nonzero constant, so the state is never square-integrable.
struct FluxNoGo {
  double tail_exponent;
  bool normalizable;  // always false
};

FluxNoGo finite_flux_no_go(double total_flux_quanta, const AngularMomentum& l);

// ---------------------------------------------------------------------------
// Spinor reconstruction
// ---------------------------------------------------------------------------

// Rebuilds the surface spinor from the reduced radial pair:
//   (psi1, psi2) = (g1, i g2)/sqrt(sinh u),
//   F = exp(-(u/2) sigma_y) (psi1, psi2)^T   [cosh/sinh mixing],
//   Psi = (e^{i(lambda-1/2)phi} F1, e^{i(lambda+1/2)phi} F2).
std::array<std::complex<double>, 2> spinor_assembly(double g1, double g2,
                                                    const AngularMomentum& l,
                                                    double u, double phi);

// Convenience overload: linear interpolation of the sampled components at u.
std::array<std::complex<double>, 2> spinor_assembly(const SampledFunction& g1,
                                                    const SampledFunction& g2,
                                                    const AngularMomentum& l,
                                                    double u, double phi);

}  // namespace hyperlandau
