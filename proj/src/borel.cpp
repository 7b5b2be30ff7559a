#include "lvr/borel.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "lvr/errors.hpp"

namespace lvr {

DomainSpec DomainSpec::dr(int q, double R) {
  DomainSpec s;
  s.kind = Kind::DR;
  s.q = q;
  s.R = R;
  return s;
}

DomainSpec DomainSpec::pacman(int q, double radius, double half_angle) {
  DomainSpec s;
  s.kind = Kind::Pacman;
  s.q = q;
  s.radius = radius;
  s.half_angle = half_angle;
  return s;
}

DomainSpec DomainSpec::cardioid(int q, double radius) {
  DomainSpec s;
  s.kind = Kind::Cardioid;
  s.q = q;
  s.radius = radius;
  return s;
}

bool in_domain(std::complex<double> z, const DomainSpec& spec) {
  if (spec.q < 1) throw DomainError("in_domain: q must be >= 1");
  if (z == 0.0) return true;  // limit point, inside by convention
  const double r = std::abs(z);
  const double arg = std::arg(z);
  const double q = static_cast<double>(spec.q);
  switch (spec.kind) {
    case DomainSpec::Kind::DR: {
      if (std::abs(arg) >= q * std::numbers::pi / 2.0) return false;
      double bound = std::pow(2.0 * spec.R, q) * std::pow(std::cos(arg / q), q);
      return r < bound - 1e-12 * (1.0 + bound);  // boundary counts as outside
    }
    case DomainSpec::Kind::Pacman:
      return r < spec.radius && std::abs(arg) < spec.half_angle;
    case DomainSpec::Kind::Cardioid: {
      if (std::abs(arg) >= q * std::numbers::pi / 2.0) return false;
      double bound = spec.radius * std::pow(std::cos(arg / q), q);
      return r < bound - 1e-12 * (1.0 + bound);
    }
  }
  return false;
}

bool in_domain_resolvent_form(std::complex<double> z, const DomainSpec& spec) {
  if (spec.kind != DomainSpec::Kind::DR)
    throw DomainError("in_domain_resolvent_form: only defined for D_R");
  if (z == 0.0) return true;
  // principal branch of z^{-1/q}; the same boundary slack as the cosine form
  std::complex<double> w = std::pow(z, -1.0 / static_cast<double>(spec.q));
  double threshold = 1.0 / (2.0 * spec.R);
  return w.real() > threshold + 1e-12 * (1.0 + threshold);
}

BorelSeries borel_leroy_transform(const std::vector<BigRat>& a, int q) {
  if (q < 1) throw DomainError("borel_leroy_transform: q must be >= 1");
  BorelSeries out;
  out.q = q;
  out.origin = a;
  out.coefficients.reserve(a.size());
  BigInt fact = 1;
  int arg = 0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    int target = q * static_cast<int>(n);
    while (arg < target) fact *= ++arg;  // (qn)! built incrementally
    out.coefficients.push_back(a[n] / BigRat(fact));
  }
  return out;
}

void gauss_laguerre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  // Golub-Welsch: Jacobi matrix of the Laguerre recurrence; weight mu_0 = 1.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = 2.0 * i + 1.0;
    if (i + 1 < n) {
      J(i, i + 1) = static_cast<double>(i + 1);
      J(i + 1, i) = static_cast<double>(i + 1);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  nodes.resize(static_cast<std::size_t>(n));
  weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    weights[static_cast<std::size_t>(i)] = v * v;
  }
}

namespace {

const std::pair<std::vector<double>, std::vector<double>>& cached_laguerre(int n) {
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::pair<std::vector<double>, std::vector<double>> nw;
  gauss_laguerre(n, nw.first, nw.second);
  return cache.emplace(n, std::move(nw)).first->second;
}

}  // namespace

QuadratureResult inverse_borel_quadrature(
    const std::function<std::complex<double>(std::complex<double>)>& B,
    std::complex<double> z, int q, const QuadratureParams& params) {
  if (q < 1) throw DomainError("inverse_borel_quadrature: q must be >= 1");
  if (z == 0.0) return {B(0.0), 0.0, 0};

  auto integrate = [&](int n) {
    const auto& [nodes, weights] = cached_laguerre(n);
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      double uq = std::pow(nodes[i], q);
      acc += weights[i] * B(z * uq);
    }
    return acc;
  };

  std::complex<double> prev = integrate(params.initial_nodes);
  for (int n = 2 * params.initial_nodes; n <= params.max_nodes; n *= 2) {
    std::complex<double> cur = integrate(n);
    double diff = std::abs(cur - prev);
    if (diff < params.tolerance * (1.0 + std::abs(cur))) return {cur, diff, n};
    if (diff > 1e6 * (1.0 + std::abs(prev)))
      throw ConvergenceError("inverse_borel_quadrature: integrand growth exceeds the kernel");
    prev = cur;
  }
  throw ConvergenceError("inverse_borel_quadrature: refinements did not agree");
}

double remainder_envelope(int n, double sigma, int q, std::complex<double> z) {
  if (n < 0 || q < 1 || sigma < 0) throw DomainError("remainder_envelope: bad arguments");
  double fact = 1.0;
  for (int i = 2; i <= q * n; ++i) fact *= static_cast<double>(i);
  return std::pow(sigma, n) * fact * std::pow(std::abs(z), n + 1);
}

double fit_sigma(const std::vector<std::pair<int, double>>& remainders, int q,
                 std::complex<double> z) {
  if (remainders.empty()) throw DomainError("fit_sigma: no data points");
  double sigma = 0.0;
  for (auto [n, r] : remainders) {
    if (n < 0 || r < 0) throw DomainError("fit_sigma: bad data point");
    double envelope_at_one = remainder_envelope(n, 1.0, q, z);  // (qn)! |z|^{n+1}
    if (n == 0) {
      if (r > envelope_at_one) throw DomainError("fit_sigma: n = 0 remainder exceeds |z|");
      continue;
    }
    if (r == 0.0) continue;
    sigma = std::max(sigma, std::pow(r / envelope_at_one, 1.0 / n));
  }
  return sigma;
}

}  // namespace lvr
