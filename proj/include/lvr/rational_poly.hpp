#ifndef LVR_RATIONAL_POLY_HPP
#define LVR_RATIONAL_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace lvr {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

std::string to_string(const BigRat& q);  // "num/den", "n" when den == 1

// Dense integer-coefficient polynomial in N, coefficients lowest degree first.
class PolyZ {
 public:
  PolyZ() = default;  // zero
  PolyZ(int c) : PolyZ(BigInt(c)) {}
  PolyZ(BigInt c);
  explicit PolyZ(std::vector<BigInt> coeffs);

  static PolyZ monomial(int deg, BigInt coeff = BigInt(1));

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int i) const;
  const BigInt& leading() const;

  BigRat evaluate(const BigRat& x) const;
  BigInt evaluate_int(const BigInt& x) const;

  PolyZ operator-() const;
  friend PolyZ operator+(const PolyZ& a, const PolyZ& b);
  friend PolyZ operator-(const PolyZ& a, const PolyZ& b);
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
  friend bool operator==(const PolyZ& a, const PolyZ& b) = default;

  // Exact division; throws if b does not divide *this.
  PolyZ divide_exact(const PolyZ& b) const;

  BigInt content() const;       // gcd of coefficients, sign of leading coeff
  PolyZ primitive_part() const;

  std::string to_string(const std::string& var = "N") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// gcd over Z[N]: primitive with positive leading coefficient.
PolyZ poly_gcd(PolyZ a, PolyZ b);

// Ratio of integer polynomials in N, kept canonical: gcd(num, den) = 1,
// integer contents coprime, den has positive leading coefficient.
class RationalFunctionOfN {
 public:
  RationalFunctionOfN() : num_(), den_(BigInt(1)) {}
  RationalFunctionOfN(int c) : num_(BigInt(c)), den_(BigInt(1)) {}
  RationalFunctionOfN(BigInt c) : num_(std::move(c)), den_(BigInt(1)) {}
  RationalFunctionOfN(const BigRat& q);
  RationalFunctionOfN(PolyZ num);
  RationalFunctionOfN(PolyZ num, PolyZ den);

  // N^power, power may be negative.
  static RationalFunctionOfN monomial_N(int power, BigInt coeff = BigInt(1));

  const PolyZ& num() const { return num_; }
  const PolyZ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // deg(num) - deg(den); meaningful only for nonzero values.
  int degree() const;

  BigRat evaluate_at(const BigInt& N) const;  // throws SingularError on pole

  RationalFunctionOfN operator-() const;
  friend RationalFunctionOfN operator+(const RationalFunctionOfN&, const RationalFunctionOfN&);
  friend RationalFunctionOfN operator-(const RationalFunctionOfN&, const RationalFunctionOfN&);
  friend RationalFunctionOfN operator*(const RationalFunctionOfN&, const RationalFunctionOfN&);
  friend RationalFunctionOfN operator/(const RationalFunctionOfN&, const RationalFunctionOfN&);
  friend bool operator==(const RationalFunctionOfN&, const RationalFunctionOfN&) = default;

  RationalFunctionOfN& operator+=(const RationalFunctionOfN& o) { return *this = *this + o; }
  RationalFunctionOfN& operator-=(const RationalFunctionOfN& o) { return *this = *this - o; }
  RationalFunctionOfN& operator*=(const RationalFunctionOfN& o) { return *this = *this * o; }
  RationalFunctionOfN& operator/=(const RationalFunctionOfN& o) { return *this = *this / o; }

  std::string to_string() const;

 private:
  void normalize();
  PolyZ num_, den_;
};

// Exact solve of A x = b over the field of rational functions; forward
// elimination is fraction-free (Bareiss), back substitution is rational.
// Throws SingularError when A is singular.
std::vector<RationalFunctionOfN> solve_linear_system(
    std::vector<std::vector<PolyZ>> A, std::vector<PolyZ> b);

}  // namespace lvr

#endif
