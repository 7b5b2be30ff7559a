#include "lvr/series.hpp"

#include <algorithm>

#include "lvr/errors.hpp"

namespace lvr {

LambdaSeries LambdaSeries::truncated(int order) const {
  if (order < 0) throw DomainError("LambdaSeries::truncated: negative order");
  std::vector<RationalFunctionOfN> c(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < c.size() && i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  return LambdaSeries(std::move(c));
}

LambdaSeries operator+(const LambdaSeries& a, const LambdaSeries& b) {
  int order = std::min(a.order(), b.order());
  LambdaSeries c(order);
  for (int m = 0; m <= order; ++m) c.coeff(m) = a.coeff(m) + b.coeff(m);
  return c;
}

LambdaSeries operator-(const LambdaSeries& a, const LambdaSeries& b) {
  int order = std::min(a.order(), b.order());
  LambdaSeries c(order);
  for (int m = 0; m <= order; ++m) c.coeff(m) = a.coeff(m) - b.coeff(m);
  return c;
}

LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b) {
  int order = std::min(a.order(), b.order());
  LambdaSeries c(order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= order; ++j)
      c.coeff(i + j) += a.coeff(i) * b.coeff(j);
  }
  return c;
}

LambdaSeries LambdaSeries::scaled(const RationalFunctionOfN& c) const {
  LambdaSeries out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

LambdaSeries LambdaSeries::inverse() const {
  if (coeffs_.empty() || coeffs_[0].is_zero())
    throw DomainError("LambdaSeries::inverse: constant term is zero");
  LambdaSeries inv(order());
  inv.coeff(0) = RationalFunctionOfN(1) / coeffs_[0];
  for (int m = 1; m <= order(); ++m) {
    RationalFunctionOfN acc;
    for (int j = 1; j <= m; ++j) acc += coeff(j) * inv.coeff(m - j);
    inv.coeff(m) = -acc / coeffs_[0];
  }
  return inv;
}

LambdaSeries LambdaSeries::log() const {
  if (coeffs_.empty() || !(coeffs_[0] == RationalFunctionOfN(1)))
    throw DomainError("LambdaSeries::log: constant term must be 1");
  // m Z_m = sum_{j=1..m} j L_j Z_{m-j}  =>  L_m = Z_m - (1/m) sum_{j<m} j L_j Z_{m-j}
  LambdaSeries l(order());
  for (int m = 1; m <= order(); ++m) {
    RationalFunctionOfN acc = coeff(m) * RationalFunctionOfN(BigInt(m));
    for (int j = 1; j < m; ++j)
      acc -= l.coeff(j) * coeff(m - j) * RationalFunctionOfN(BigInt(j));
    l.coeff(m) = acc / RationalFunctionOfN(BigInt(m));
  }
  return l;
}

BigRat LambdaSeries::evaluate(const BigRat& lambda, const BigInt& N) const {
  BigRat acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * lambda + coeffs_[i].evaluate_at(N);
  return acc;
}

}  // namespace lvr
