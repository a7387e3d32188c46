#include "hyperlandau/fields.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

namespace hyperlandau {

namespace {

void require_positive(double u) {
  if (!(u > 0.0)) throw DomainError("radial coordinate must satisfy u > 0");
}

double sech(double u) { return 1.0 / std::cosh(u); }

}  // namespace

// ---------------------------------------------------------------------------
// MonotoneCubic
// ---------------------------------------------------------------------------

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 4 || y_.size() != n)
    throw InvalidParameter("interpolant needs >= 4 matching samples");
  std::vector<double> d(n - 1);  // secant slopes
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = x_[i + 1] - x_[i];
    if (!(h > 0.0)) throw InvalidParameter("interpolation nodes must increase");
    d[i] = (y_[i + 1] - y_[i]) / h;
  }
  slope_.assign(n, 0.0);
  slope_[0] = d[0];
  slope_[n - 1] = d[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0) {
      slope_[i] = 0.0;  // local extremum: flat tangent keeps monotonicity
    } else {
      // Fritsch-Carlson weighted harmonic mean of the neighbouring secants.
      const double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
      const double w1 = 2.0 * h1 + h0, w2 = h1 + 2.0 * h0;
      slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
}

std::size_t MonotoneCubic::interval(double x) const {
  if (x < x_.front() || x > x_.back())
    throw DomainError("tabulated gauge evaluated outside its sample range");
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - x_.begin());
  if (i > 0) --i;
  if (i + 1 >= x_.size()) i = x_.size() - 2;
  return i;
}

double MonotoneCubic::operator()(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
  const double h10 = t * (1 - t) * (1 - t);
  const double h01 = t * t * (3 - 2 * t);
  const double h11 = t * t * (t - 1);
  return h00 * y_[i] + h * h10 * slope_[i] + h01 * y_[i + 1] +
         h * h11 * slope_[i + 1];
}

double MonotoneCubic::derivative(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double g00 = 6 * t * (t - 1) / h;
  const double g10 = (1 - t) * (1 - 3 * t);
  const double g01 = -g00;
  const double g11 = t * (3 * t - 2);
  return g00 * y_[i] + g10 * slope_[i] + g01 * y_[i + 1] + g11 * slope_[i + 1];
}

// ---------------------------------------------------------------------------
// adaptive Simpson
// ---------------------------------------------------------------------------

namespace {

double simpson_step(const std::function<double(double)>& f, double a,
                    double fa, double b, double fb, double m, double fm,
                    double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return sign * simpson_step(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

// ---------------------------------------------------------------------------
// GaugeFunction
// ---------------------------------------------------------------------------

GaugeFunction::GaugeFunction(FieldCase c) : case_(std::move(c)) {
  check_parameters(case_);
  if (const auto* t = std::get_if<TabulatedField>(&case_))
    interp_ = std::make_shared<MonotoneCubic>(t->u, t->alpha);
}

GaugeFunction GaugeFunction::from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw InvalidParameter("tabulated gauge CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "u,alpha")
    throw InvalidParameter("tabulated gauge CSV must start with header 'u,alpha'");
  TabulatedField t;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    double u = 0.0, a = 0.0;
    char comma = 0;
    if (!(ls >> u >> comma >> a) || comma != ',')
      throw InvalidParameter("tabulated gauge CSV: bad row at line " +
                             std::to_string(lineno));
    t.u.push_back(u);
    t.alpha.push_back(a);
  }
  return GaugeFunction(FieldCase{std::move(t)});
}

double GaugeFunction::alpha(double u) const {
  require_positive(u);
  struct Visitor {
    double u;
    const MonotoneCubic* interp;
    double operator()(const ConstantField& f) const {
      return f.A0 / std::tanh(u);
    }
    double operator()(const EckartField& f) const {
      return f.lambda_prime / std::sinh(u) - f.C1 / std::tanh(u) + f.D1 / f.C1;
    }
    double operator()(const PoschlTellerField& f) const {
      return f.lambda_prime / std::sinh(u) + f.C2 * std::tanh(u) + f.D2 / f.C2;
    }
    double operator()(const GeneralizedPTField& f) const {
      return f.lambda_prime / std::sinh(u) + f.C3 * std::tanh(u) +
             f.D3 * sech(u);
    }
    double operator()(const TabulatedField&) const { return (*interp)(u); }
  };
  return std::visit(Visitor{u, interp_.get()}, case_);
}

double GaugeFunction::alpha_prime(double u) const {
  require_positive(u);
  const double sh = std::sinh(u), ch = std::cosh(u);
  struct Visitor {
    double u, sh, ch;
    const MonotoneCubic* interp;
    double operator()(const ConstantField& f) const {
      return -f.A0 / (sh * sh);
    }
    double operator()(const EckartField& f) const {
      return (-f.lambda_prime * ch + f.C1) / (sh * sh);
    }
    double operator()(const PoschlTellerField& f) const {
      return -f.lambda_prime * ch / (sh * sh) + f.C2 / (ch * ch);
    }
    double operator()(const GeneralizedPTField& f) const {
      return -f.lambda_prime * ch / (sh * sh) + f.C3 / (ch * ch) -
             f.D3 * sh / (ch * ch);
    }
    double operator()(const TabulatedField&) const {
      return interp->derivative(u);
    }
  };
  return std::visit(Visitor{u, sh, ch, interp_.get()}, case_);
}

double GaugeFunction::magnetic_field(double u) const {
  require_positive(u);
  const double sh = std::sinh(u);
  struct Visitor {
    double u, sh;
    const GaugeFunction* self;
    double operator()(const ConstantField& f) const { return f.A0; }
    double operator()(const EckartField& f) const {
      return -f.C1 + (f.D1 / f.C1) / std::tanh(u);
    }
    double operator()(const PoschlTellerField& f) const {
      const double s = sech(u);
      return f.C2 * (1.0 + s * s) + (f.D2 / f.C2) / std::tanh(u);
    }
    double operator()(const GeneralizedPTField& f) const {
      const double s = sech(u);
      return f.C3 * (1.0 + s * s) + f.D3 * s * s / sh;
    }
    double operator()(const TabulatedField&) const {
      // b = (alpha sinh u)' / sinh u with a centred difference on the
      // interpolated curve.
      const double lo = self->interp_->x_min(), hi = self->interp_->x_max();
      double h = 1e-4 * std::max(1.0, u);
      h = std::min({h, u - lo, hi - u});
      if (!(h > 0.0)) h = 1e-12;
      const double fp = self->alpha(u + h) * std::sinh(u + h);
      const double fm = self->alpha(u - h) * std::sinh(u - h);
      return (fp - fm) / (2.0 * h * sh);
    }
  };
  return std::visit(Visitor{u, sh, this}, case_);
}

double GaugeFunction::flux_in_quanta(double u) const {
  require_positive(u);
  return alpha(u) * std::sinh(u);
}

double GaugeFunction::flux_string() const {
  struct Visitor {
    const GaugeFunction* self;
    double operator()(const ConstantField& f) const { return f.A0; }
    double operator()(const EckartField& f) const {
      return f.lambda_prime - f.C1;
    }
    double operator()(const PoschlTellerField& f) const {
      return f.lambda_prime;
    }
    double operator()(const GeneralizedPTField& f) const {
      return f.lambda_prime;
    }
    double operator()(const TabulatedField& t) const {
      // Best available stand-in for the u -> 0 limit.
      return t.alpha.front() * std::sinh(t.u.front());
    }
  };
  return std::visit(Visitor{this}, case_);
}

double GaugeFunction::flux_surface(double u) const {
  require_positive(u);
  if (const auto* t = std::get_if<TabulatedField>(&case_)) {
    const double lo = t->u.front();
    if (u < lo)
      throw DomainError("tabulated gauge evaluated outside its sample range");
    // Genuine surface integral over the sampled region; the (unknowable)
    // sub-table contribution is excluded.
    return adaptive_simpson(
        [this](double v) { return magnetic_field(v) * std::sinh(v); }, lo, u,
        1e-11);
  }
  return flux_in_quanta(u) - flux_string();
}

double GaugeFunction::origin_pole_strength() const {
  struct Visitor {
    const GaugeFunction* self;
    double operator()(const ConstantField& f) const { return f.A0; }
    double operator()(const EckartField& f) const {
      return f.lambda_prime - f.C1;
    }
    double operator()(const PoschlTellerField& f) const {
      return f.lambda_prime;
    }
    double operator()(const GeneralizedPTField& f) const {
      return f.lambda_prime;
    }
    double operator()(const TabulatedField& t) const {
      return t.u.front() * t.alpha.front();
    }
  };
  return std::visit(Visitor{this}, case_);
}

double GaugeFunction::alpha_at_infinity() const {
  struct Visitor {
    double operator()(const ConstantField& f) const { return f.A0; }
    double operator()(const EckartField& f) const {
      return -f.C1 + f.D1 / f.C1;
    }
    double operator()(const PoschlTellerField& f) const {
      return f.C2 + f.D2 / f.C2;
    }
    double operator()(const GeneralizedPTField& f) const { return f.C3; }
    double operator()(const TabulatedField& t) const {
      return t.alpha.back();
    }
  };
  return std::visit(Visitor{}, case_);
}

double GaugeFunction::integral_alpha(double u) const {
  require_positive(u);
  struct Visitor {
    double u;
    const GaugeFunction* self;
    double operator()(const ConstantField& f) const {
      return f.A0 * std::log(std::sinh(u));
    }
    double operator()(const EckartField& f) const {
      return f.lambda_prime * std::log(std::tanh(0.5 * u)) -
             f.C1 * std::log(std::sinh(u)) + (f.D1 / f.C1) * u;
    }
    double operator()(const PoschlTellerField& f) const {
      return f.lambda_prime * std::log(std::tanh(0.5 * u)) +
             f.C2 * std::log(std::cosh(u)) + (f.D2 / f.C2) * u;
    }
    double operator()(const GeneralizedPTField& f) const {
      // int sech u du = atan(sinh u)
      return f.lambda_prime * std::log(std::tanh(0.5 * u)) +
             f.C3 * std::log(std::cosh(u)) + f.D3 * std::atan(std::sinh(u));
    }
    double operator()(const TabulatedField&) const {
      return adaptive_simpson([this](double v) { return self->alpha(v); }, 1.0,
                              u, 1e-12);
    }
  };
  return std::visit(Visitor{u, this}, case_);
}

// ---------------------------------------------------------------------------
// Operation wrappers and superpotential
// ---------------------------------------------------------------------------

double alpha(const GaugeFunction& g, double u) { return g.alpha(u); }
double magnetic_field(const GaugeFunction& g, double u) {
  return g.magnetic_field(u);
}
double flux_in_quanta(const GaugeFunction& g, double u) {
  return g.flux_in_quanta(u);
}
double flux_surface(const GaugeFunction& g, double u) {
  return g.flux_surface(u);
}

double superpotential(const GaugeFunction& g, const AngularMomentum& l,
                      double u) {
  require_positive(u);
  return -l.value() / std::sinh(u) + g.alpha(u);
}

double Superpotential::operator()(double u) const {
  return superpotential(gauge_, lambda_, u);
}

double Superpotential::derivative(double u) const {
  require_positive(u);
  const double sh = std::sinh(u);
  return lambda_.value() * std::cosh(u) / (sh * sh) + gauge_.alpha_prime(u);
}

double Superpotential::asymptotic_value() const {
  return gauge_.alpha_at_infinity();
}

}  // namespace hyperlandau
