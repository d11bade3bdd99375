#pragma once

namespace firelink::special {

/// Bessel function of the first kind J_n(x) for integer order n >= 0.
///
/// Small arguments use the ascending power series; elsewhere Miller's
/// backward recurrence normalised with J_0 + 2 sum_k J_{2k} = 1.
double bessel_j(int order, double x);

}  // namespace firelink::special
