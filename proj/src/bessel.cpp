#include "firelink/bessel.hpp"

#include <cmath>
#include <vector>

#include "firelink/errors.hpp"

namespace firelink::special {

namespace {

double ascending_series(int order, double x) {
  const double half = 0.5 * x;
  const double q = -half * half;
  double term = 1.0;
  for (int k = 1; k <= order; ++k) term *= half / k;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * (k + order));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double miller(int order, double x) {
  // Start well above both the order and the argument so the dominant
  // (minimal) solution has converged by the time we reach `order`.
  const double anchor = std::max(static_cast<double>(order), x);
  int start = static_cast<int>(anchor + 30.0 + 4.0 * std::sqrt(anchor + 1.0));
  start += start % 2;  // even so the normalisation sum pairs up

  constexpr double kRescale = 1e250;
  double next = 0.0;  // J_{k+1}
  double curr = 1e-300;  // J_k, arbitrary seed
  double norm = 0.0;
  double wanted = 0.0;
  const double two_over_x = 2.0 / x;
  for (int k = start; k > 0; --k) {
    const double prev = k * two_over_x * curr - next;  // J_{k-1}
    next = curr;
    curr = prev;
    if (std::abs(curr) > kRescale) {
      curr /= kRescale;
      next /= kRescale;
      norm /= kRescale;
      wanted /= kRescale;
    }
    if (k - 1 == order) wanted = curr;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * curr;
  }
  norm += curr;  // J_0
  if (order == 0) wanted = curr;
  return wanted / norm;
}

}  // namespace

double bessel_j(int order, double x) {
  if (order < 0) throw ValidationError("bessel_j: order must be >= 0");
  if (!std::isfinite(x)) throw ValidationError("bessel_j: argument is not finite");
  if (x < 0.0) return (order % 2 == 0 ? 1.0 : -1.0) * bessel_j(order, -x);
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  if (x < 2.0) return ascending_series(order, x);
  return miller(order, x);
}

}  // namespace firelink::special
