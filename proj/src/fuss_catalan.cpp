#include "lvr/fuss_catalan.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "lvr/errors.hpp"

namespace lvr {

namespace {

using Series = std::vector<BigInt>;  // truncated integer power series

Series truncated_mul(const Series& a, const Series& b, std::size_t n) {
  Series c(n + 1);
  for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

std::complex<double> tp_residual(int p, std::complex<double> z, std::complex<double> t) {
  std::complex<double> tp = 1.0;
  for (int i = 0; i < p; ++i) tp *= t;
  return z * tp - t + 1.0;
}

// Double-precision coefficient tables, one exact computation per (p, n).
const std::vector<double>& cached_coeffs(int p, int n_terms);

}  // namespace

FussCatalanSeries fuss_catalan_numbers(int p, int n_max) {
  if (p < 2) throw DomainError("fuss_catalan_numbers: p must be >= 2");
  if (n_max < 0) throw DomainError("fuss_catalan_numbers: n_max < 0");
  const std::size_t n = static_cast<std::size_t>(n_max);

  Series t(n + 1);
  t[0] = 1;
  // Each pass fixes one further coefficient; n_max passes reach order n_max.
  for (std::size_t pass = 0; pass < n + 1; ++pass) {
    Series tp = t;
    for (int i = 1; i < p; ++i) tp = truncated_mul(tp, t, n);
    Series next(n + 1);
    next[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) next[m] = tp[m - 1];  // z * T^p shifted
    t = std::move(next);
  }

  FussCatalanSeries out;
  out.p = p;
  out.coefficients = std::move(t);
  return out;
}

namespace {

const std::vector<double>& cached_coeffs(int p, int n_terms) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<double>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, n_terms);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FussCatalanSeries fc = fuss_catalan_numbers(p, n_terms);
  std::vector<double> d(fc.coefficients.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<double>(fc.coefficients[i]);
  return cache.emplace(key, std::move(d)).first->second;
}

}  // namespace

TpValue tp_series_eval(int p, std::complex<double> z, int n_terms, double guard) {
  if (p < 2) throw DomainError("tp_series_eval: p must be >= 2");
  if (std::abs(z) > guard)
    throw ConvergenceError("tp_series_eval: |z| exceeds the series guard radius");
  const auto& coeffs = cached_coeffs(p, n_terms);
  std::complex<double> acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return TpValue{acc, std::abs(tp_residual(p, z, acc))};
}

std::complex<double> tp_cardano(std::complex<double> z, double guard) {
  if (std::abs(z) > guard)
    throw DomainError("tp_cardano: outside the neighborhood-of-0 guard");
  if (std::abs(z) < 1e-8) {
    // Radical formula loses accuracy as the two spurious roots run off to
    // infinity; the first series terms are exact here.
    return 1.0 + z * (1.0 + z * (3.0 + z * 12.0));
  }

  // z T^3 - T + 1 = 0  ->  T^3 + cp T + cq = 0 with cp = -1/z, cq = 1/z.
  const std::complex<double> cp = -1.0 / z;
  const std::complex<double> cq = 1.0 / z;
  const std::complex<double> disc = cq * cq / 4.0 + cp * cp * cp / 27.0;
  const std::complex<double> sq = std::sqrt(disc);

  std::complex<double> u = std::pow(-cq / 2.0 + sq, 1.0 / 3.0);
  if (std::abs(u) < 1e-300) u = std::pow(-cq / 2.0 - sq, 1.0 / 3.0);
  const std::complex<double> omega(-0.5, std::sqrt(3.0) / 2.0);

  std::array<std::complex<double>, 3> roots;
  for (int k = 0; k < 3; ++k) {
    std::complex<double> uk = u;
    for (int i = 0; i < k; ++i) uk *= omega;
    roots[static_cast<std::size_t>(k)] = uk - cp / (3.0 * uk);
  }

  // The analytic branch stays near 1; the other two grow like |3z|^{-1/2}.
  std::size_t best = 0;
  double best_dist = std::abs(roots[0] - 1.0);
  for (std::size_t k = 1; k < 3; ++k) {
    double dist = std::abs(roots[k] - 1.0);
    if (dist < best_dist) {
      best = k;
      best_dist = dist;
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    if (k == best) continue;
    if (std::abs(roots[k] - roots[best]) < 1e-6 * (1.0 + std::abs(roots[best])))
      throw ConvergenceError("tp_cardano: root collision near a branch point");
  }
  const std::complex<double> t = roots[best];
  if (std::abs(tp_residual(3, z, t)) > 1e-9 * (1.0 + std::abs(cq)))
    throw ConvergenceError("tp_cardano: radical root fails the cubic residual");
  return t;
}

std::complex<double> tp_eval(int p, std::complex<double> z, double guard) {
  if (p < 2) throw DomainError("tp_eval: p must be >= 2");
  if (std::abs(z) <= guard) return tp_series_eval(p, z, 60, guard).value;

  // Newton continuation along the ray from the guard circle out to z,
  // seeded with the series value; this pins the T(0)=1 branch.
  std::complex<double> dir = z / std::abs(z);
  double r = guard;
  std::complex<double> t = tp_series_eval(p, dir * r, 60, guard).value;
  const double target = std::abs(z);
  while (r < target) {
    r = std::min(target, r * 1.25 + 1e-3);
    std::complex<double> zz = dir * r;
    bool converged = false;
    for (int it = 0; it < 60; ++it) {
      std::complex<double> tpm1 = 1.0;
      for (int i = 0; i < p - 1; ++i) tpm1 *= t;
      std::complex<double> f = zz * tpm1 * t - t + 1.0;
      std::complex<double> df = static_cast<double>(p) * zz * tpm1 - 1.0;
      if (std::abs(df) < 1e-14)
        throw ConvergenceError("tp_eval: Newton derivative vanished (branch point)");
      std::complex<double> step = f / df;
      t -= step;
      if (std::abs(step) < 1e-14 * (1.0 + std::abs(t))) {
        converged = true;
        break;
      }
    }
    if (!converged || std::abs(tp_residual(p, zz, t)) > 1e-10 * (1.0 + std::abs(zz)))
      throw ConvergenceError("tp_eval: Newton continuation failed");
  }
  return t;
}

}  // namespace lvr
