#ifndef LVR_FUSS_CATALAN_HPP
#define LVR_FUSS_CATALAN_HPP

#include <complex>
#include <vector>

#include "lvr/rational_poly.hpp"

namespace lvr {

// Coefficients C_n^{(p)} of the generating function T_p solving
// z T^p - T + 1 = 0 with T(0) = 1.
struct FussCatalanSeries {
  int p = 2;
  std::vector<BigInt> coefficients;  // n = 0 .. n_max
};

// Computed by iterating T <- 1 + z T^p order by order (the functional
// equation is its own recursion); exact integers.
FussCatalanSeries fuss_catalan_numbers(int p, int n_max);

struct TpValue {
  std::complex<double> value;
  double residual;  // |z T^p - T + 1|
};

// Partial sum of the power series; |z| must stay inside the guard radius.
TpValue tp_series_eval(int p, std::complex<double> z, int n_terms,
                       double guard = 0.05);

// p = 3 closed form by radicals, on the branch analytic at 0 with T(0) = 1.
std::complex<double> tp_cardano(std::complex<double> z, double guard = 0.08);

// Branch-consistent evaluation anywhere reachable by continuity from z = 0:
// series inside the guard radius, Newton continuation along the ray outside.
std::complex<double> tp_eval(int p, std::complex<double> z, double guard = 0.05);

}  // namespace lvr

#endif
