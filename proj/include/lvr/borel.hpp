#ifndef LVR_BOREL_HPP
#define LVR_BOREL_HPP

#include <complex>
#include <functional>
#include <vector>

#include "lvr/rational_poly.hpp"

namespace lvr {

// Analyticity domains in the coupling plane.
//   DR:       Re z^{-1/q} > (2R)^{-1},  equivalently
//             |z| < (2R)^q cos^q(arg z / q) with |arg z| < q pi/2.
//   Pacman:   sector |z| < radius, |arg z| < half_angle.
//   Cardioid: |z| < radius * cos^q(arg z / q).
struct DomainSpec {
  enum class Kind { DR, Pacman, Cardioid };
  Kind kind = Kind::DR;
  int q = 1;
  double R = 1.0;            // DR parameter
  double radius = 1.0;       // pacman / cardioid size
  double half_angle = 1.57;  // pacman opening half-angle

  static DomainSpec dr(int q, double R);
  static DomainSpec pacman(int q, double radius, double half_angle);
  static DomainSpec cardioid(int q, double radius);
};

// Boundary counts as outside; z = 0 is inside by convention (limit point).
bool in_domain(std::complex<double> z, const DomainSpec& spec);

// Same predicate through the Re z^{-1/q} form (principal branch); used to
// cross-check the cosine form.
bool in_domain_resolvent_form(std::complex<double> z, const DomainSpec& spec);

// Order-q Borel-LeRoy transform b_n = a_n / (qn)!.
struct BorelSeries {
  int q = 1;
  std::vector<BigRat> origin;        // a_n
  std::vector<BigRat> coefficients;  // b_n
};

BorelSeries borel_leroy_transform(const std::vector<BigRat>& a, int q);

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate;
  int nodes_used;
};

// Inverse representation F(z) = (1/(qz)) int_0^inf B(t) (t/z)^{1/q-1}
// exp(-(t/z)^{1/q}) dt, computed after the substitution u = (t/z)^{1/q} as
// int_0^inf B(z u^q) e^{-u} du by Gauss-Laguerre with node doubling.
struct QuadratureParams {
  int initial_nodes = 64;
  int max_nodes = 1024;
  double tolerance = 1e-9;
};

QuadratureResult inverse_borel_quadrature(
    const std::function<std::complex<double>(std::complex<double>)>& B,
    std::complex<double> z, int q, const QuadratureParams& params = {});

// sigma^n (qn)! |z|^{n+1}
double remainder_envelope(int n, double sigma, int q, std::complex<double> z);

// Smallest sigma with |R_n| <= sigma^n (qn)! |z|^{n+1} for all supplied n.
double fit_sigma(const std::vector<std::pair<int, double>>& remainders, int q,
                 std::complex<double> z);

// Gauss-Laguerre nodes/weights for weight e^{-u} on [0, inf).
void gauss_laguerre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace lvr

#endif
