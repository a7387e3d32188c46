// Core domain types shared by every other module: angular momentum,
// field-case parameters, unit conventions, radial grids and spectrum entries.
//
// Conventions (used throughout the library):
//   * everything is dimensionless with hbar = c = 1 and carrier charge q = -e
//     absorbed into the gauge function, so alpha(u) = (qR/c hbar) A(u),
//     b(u) = (qR^2/c hbar) B(u) and f(u) = Phi(u)/phi_0 are pure numbers;
//   * the hyperboloid radius R enters only when converting a partner
//     eigenvalue eps = (R E)^2 back to a Dirac energy E = +-sqrt(eps)/R.

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hyperlandau {

// ---------------------------------------------------------------------------
// Error types
// ---------------------------------------------------------------------------

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnsupportedCase : std::logic_error {
  using std::logic_error::logic_error;
};

// Requested analytic spectrum does not exist (inadmissible parameters).
struct NoBoundStates : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters are fine but outside the analytically solvable point
// (e.g. lambda != lambda'); callers should fall back to the numeric engine.
struct AnalyticUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Jacobi recurrence hit an exactly vanishing coefficient denominator.
struct DegenerateParameters : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularPotential : std::runtime_error {
  explicit SingularPotential(std::size_t i)
      : std::runtime_error("non-finite potential sample at grid index " +
                           std::to_string(i)),
        index(i) {}
  std::size_t index;
};

struct EigenvectorFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Angular momentum
// ---------------------------------------------------------------------------

// Total angular momentum eigenvalue lambda, stored as 2*lambda so half-odd
// values stay exact.  Strict mode only accepts odd 2*lambda; a relaxed real
// value (used e.g. to reproduce integer-lambda parameter sets) overrides the
// integer and is flagged non-physical in all outputs.
class AngularMomentum {
 public:
  static AngularMomentum strict(int two_lambda) {
    if (two_lambda % 2 == 0)
      throw InvalidParameter(
          "strict angular momentum requires odd 2*lambda, got " +
          std::to_string(two_lambda));
    return AngularMomentum(two_lambda, std::nullopt);
  }

  static AngularMomentum relaxed(double value) {
    if (!std::isfinite(value))
      throw InvalidParameter("relaxed lambda must be finite");
    return AngularMomentum(static_cast<int>(std::llround(2.0 * value)), value);
  }

  double value() const {
    return relaxed_ ? *relaxed_ : 0.5 * static_cast<double>(two_lambda_);
  }
  int two_lambda() const { return two_lambda_; }
  bool is_relaxed() const { return relaxed_.has_value(); }

 private:
  AngularMomentum(int two_lambda, std::optional<double> relaxed)
      : two_lambda_(two_lambda), relaxed_(relaxed) {}
  int two_lambda_;
  std::optional<double> relaxed_;
};

// ---------------------------------------------------------------------------
// Field cases
// ---------------------------------------------------------------------------

// The four solvable vector-potential families plus a tabulated gauge.  The
// stored parameters are those of the dimensionless gauge function alpha(u):
//   (i)   alpha = A0 coth u
//   (ii)  alpha = lambda'/sinh u - C1 coth u + D1/C1
//   (iii) alpha = lambda'/sinh u + C2 tanh u + D2/C2
//   (iv)  alpha = lambda'/sinh u + C3 tanh u + D3 sech u

struct ConstantField {
  double A0;
};

struct EckartField {
  double lambda_prime;
  double C1;
  double D1;
};

struct PoschlTellerField {
  double lambda_prime;
  double C2;
  double D2;
};

struct GeneralizedPTField {
  double lambda_prime;
  double C3;
  double D3;
};

// Samples of alpha(u) on strictly increasing u > 0; interpolated with a
// monotone cubic by the fields module.
struct TabulatedField {
  std::vector<double> u;
  std::vector<double> alpha;
};

using FieldCase = std::variant<ConstantField, EckartField, PoschlTellerField,
                               GeneralizedPTField, TabulatedField>;

// "i", "ii", "iii", "iv" or "tabulated".
const char* case_name(const FieldCase& c);

// Throws InvalidParameter for malformed parameters (NaN, C1 = 0, bad table).
void check_parameters(const FieldCase& c);

// ---------------------------------------------------------------------------
// Units
// ---------------------------------------------------------------------------

// Only the radius R carries a unit.  Dirac energies come out in units of 1/R
// (multiply by hbar*v_F for a physical energy).
struct UnitSystem {
  double R = 1.0;

  double dirac_energy(double epsilon) const { return std::sqrt(epsilon) / R; }
};

// ---------------------------------------------------------------------------
// Grids and spectrum entries
// ---------------------------------------------------------------------------

// Uniform radial grid on [u_min, u_max], u_min > 0: the coordinate
// singularity at u = 0 is always excluded.
class RadialGrid {
 public:
  RadialGrid(double u_min, double u_max, int n_points)
      : u_min_(u_min), u_max_(u_max), n_(n_points) {
    if (!(u_min > 0.0) || !(u_max > u_min) || n_points < 16 ||
        !std::isfinite(u_min) || !std::isfinite(u_max))
      throw InvalidParameter("radial grid requires 0 < u_min < u_max, n >= 16");
  }

  double u_min() const { return u_min_; }
  double u_max() const { return u_max_; }
  int n_points() const { return n_; }
  double step() const { return (u_max_ - u_min_) / (n_ - 1); }
  double node(int i) const { return u_min_ + step() * i; }

 private:
  double u_min_, u_max_;
  int n_;
};

struct SampledFunction {
  SampledFunction(RadialGrid g, std::vector<double> v)
      : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != static_cast<std::size_t>(grid.n_points()))
      throw InvalidParameter("sample count does not match grid");
  }
  RadialGrid grid;
  std::vector<double> values;
};

// One level of the Dirac spectrum.  epsilon is the partner eigenvalue
// eps = (R E)^2; the two Dirac energies are +-sqrt(eps)/R.
struct SpectrumEntry {
  int n = 0;
  double epsilon = 0.0;
  double dirac_energy_plus = 0.0;
  double dirac_energy_minus = 0.0;
  bool is_threshold = false;
  std::string degeneracy;

  static SpectrumEntry make(int n, double epsilon, double R,
                            bool is_threshold = false,
                            std::string degeneracy = {}) {
    SpectrumEntry e;
    e.n = n;
    e.epsilon = epsilon;
    e.dirac_energy_plus = std::sqrt(epsilon) / R;
    e.dirac_energy_minus = -e.dirac_energy_plus;
    e.is_threshold = is_threshold;
    e.degeneracy = std::move(degeneracy);
    return e;
  }
};

// ---------------------------------------------------------------------------
// Case validation
// ---------------------------------------------------------------------------

enum class ZeroModeVerdict { admissible, fails_at_origin, fails_at_infinity };

std::string to_string(ZeroModeVerdict v);

struct ValidationReport {
  std::string case_tag;
  bool analytic_available = false;
  std::string analytic_note;
  ZeroModeVerdict zero_mode = ZeroModeVerdict::fails_at_infinity;
  bool bound_states_exist = false;
  bool non_physical_lambda = false;  // relaxed (non-half-odd) lambda in use
  std::vector<std::string> notes;
};

// Pure report: never throws on merely non-physical parameters, only on
// malformed ones (NaN, C1 = 0, bad table).
ValidationReport validate_case(const FieldCase& c, const AngularMomentum& l);

// Shared closed-form zero-mode admissibility conditions:
//   (i)  A0 > 0 and lambda - A0 >= 0
//   (ii) C1 > 0, D1 > C1^2 and lambda >= lambda'
//   (iii)/(iv, D3=0) C > 0 and lambda >= lambda'
// Tabulated gauges are classified from their sampled pole strength and tail.
ZeroModeVerdict zero_mode_case_verdict(const FieldCase& c,
                                       const AngularMomentum& l);

}  // namespace hyperlandau
