#include <cmath>

#include "hyperlandau/susy.hpp"

namespace hyperlandau {

double jacobi(int n, double a, double b, double w) {
  if (n < 0) throw InvalidParameter("jacobi: degree must be >= 0");
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double p = (a + 1.0) + 0.5 * (a + b + 2.0) * (w - 1.0);
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    if (c1 == 0.0)
      throw DegenerateParameters(
          "jacobi recurrence denominator vanishes (degenerate a+b)");
    const double c2 = (s - 1.0) * (a * a - b * b);
    const double c3 = (s - 2.0) * (s - 1.0) * s;
    const double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = ((c2 + c3 * w) * p - c4 * pm1) / c1;
    pm1 = p;
    p = next;
  }
  return p;
}

double jacobi_derivative(int n, double a, double b, double w) {
  if (n < 0) throw InvalidParameter("jacobi_derivative: degree must be >= 0");
  if (n == 0) return 0.0;
  return 0.5 * (n + a + b + 1.0) * jacobi(n - 1, a + 1.0, b + 1.0, w);
}

}  // namespace hyperlandau
