#ifndef LVR_SERIES_HPP
#define LVR_SERIES_HPP

#include <vector>

#include "lvr/rational_poly.hpp"

namespace lvr {

// Power series in lambda truncated at a recorded order, with exact
// rational-function-of-N coefficients.
class LambdaSeries {
 public:
  LambdaSeries() = default;
  explicit LambdaSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
  explicit LambdaSeries(std::vector<RationalFunctionOfN> coeffs) : coeffs_(std::move(coeffs)) {}

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RationalFunctionOfN& coeff(int m) const { return coeffs_[static_cast<std::size_t>(m)]; }
  RationalFunctionOfN& coeff(int m) { return coeffs_[static_cast<std::size_t>(m)]; }
  const std::vector<RationalFunctionOfN>& coeffs() const { return coeffs_; }

  LambdaSeries truncated(int order) const;

  friend LambdaSeries operator+(const LambdaSeries& a, const LambdaSeries& b);
  friend LambdaSeries operator-(const LambdaSeries& a, const LambdaSeries& b);
  friend LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b);
  friend bool operator==(const LambdaSeries&, const LambdaSeries&) = default;

  LambdaSeries scaled(const RationalFunctionOfN& c) const;

  // Requires an invertible constant term.
  LambdaSeries inverse() const;

  // log of a series with constant term 1.
  LambdaSeries log() const;

  // Exact evaluation of the truncation at rational lambda and integer N.
  BigRat evaluate(const BigRat& lambda, const BigInt& N) const;

 private:
  std::vector<RationalFunctionOfN> coeffs_;
};

}  // namespace lvr

#endif
