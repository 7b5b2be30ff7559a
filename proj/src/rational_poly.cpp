#include "lvr/rational_poly.hpp"

#include <algorithm>
#include <sstream>

#include "lvr/errors.hpp"

namespace lvr {

using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::numerator;

std::string to_string(const BigRat& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

PolyZ::PolyZ(BigInt c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

PolyZ::PolyZ(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyZ PolyZ::monomial(int deg, BigInt coeff) {
  if (deg < 0) throw DomainError("PolyZ::monomial: negative degree");
  if (coeff == 0) return PolyZ();
  std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
  c.back() = std::move(coeff);
  return PolyZ(std::move(c));
}

void PolyZ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt PolyZ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigInt(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigInt& PolyZ::leading() const {
  if (is_zero()) throw DomainError("PolyZ::leading on zero polynomial");
  return coeffs_.back();
}

BigRat PolyZ::evaluate(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

BigInt PolyZ::evaluate_int(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyZ PolyZ::operator-() const {
  PolyZ r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PolyZ operator+(const PolyZ& a, const PolyZ& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) c[i] += b.coeffs_[i];
  }
  return PolyZ(std::move(c));
}

PolyZ operator-(const PolyZ& a, const PolyZ& b) { return a + (-b); }

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero() || b.is_zero()) return PolyZ();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyZ(std::move(c));
}

PolyZ PolyZ::divide_exact(const PolyZ& b) const {
  if (b.is_zero()) throw DomainError("PolyZ::divide_exact by zero");
  if (is_zero()) return PolyZ();
  if (degree() < b.degree()) throw DomainError("PolyZ::divide_exact: not divisible");
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(static_cast<std::size_t>(degree() - b.degree()) + 1);
  for (int d = degree(); d >= b.degree(); --d) {
    BigInt& lead = rem[static_cast<std::size_t>(d)];
    if (lead == 0) continue;
    if (lead % b.leading() != 0) throw DomainError("PolyZ::divide_exact: not divisible");
    BigInt q = lead / b.leading();
    quot[static_cast<std::size_t>(d - b.degree())] = q;
    for (int i = 0; i <= b.degree(); ++i)
      rem[static_cast<std::size_t>(d - b.degree() + i)] -= q * b.coeff(i);
  }
  for (const auto& r : rem)
    if (r != 0) throw DomainError("PolyZ::divide_exact: nonzero remainder");
  return PolyZ(std::move(quot));
}

BigInt PolyZ::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  if (g == 0) return BigInt(0);
  if (leading() < 0) g = -g;
  return g;
}

PolyZ PolyZ::primitive_part() const {
  if (is_zero()) return PolyZ();
  BigInt c = content();
  PolyZ r = *this;
  for (auto& x : r.coeffs_) x /= c;
  return r;
}

std::string PolyZ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    BigInt c = coeff(d);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    BigInt a = abs(c);
    if (a != 1 || d == 0) os << a;
    if (d >= 1) {
      if (a != 1) os << "*";
      os << var;
      if (d > 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

namespace {

// Polynomial with rational coefficients, only used inside gcd.
using PolyQ = std::vector<BigRat>;

PolyQ to_q(const PolyZ& p) {
  PolyQ q(p.coeffs().begin(), p.coeffs().end());
  return q;
}

void trim_q(PolyQ& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a mod b over Q.
PolyQ rem_q(PolyQ a, const PolyQ& b) {
  while (a.size() >= b.size() && !a.empty()) {
    BigRat f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    trim_q(a);
  }
  return a;
}

PolyZ from_q_primitive(const PolyQ& p) {
  if (p.empty()) return PolyZ();
  BigInt lcm = 1;
  for (const auto& c : p) {
    BigInt d = denominator(c);
    lcm = lcm / gcd(lcm, d) * d;
  }
  std::vector<BigInt> z(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    z[i] = numerator(p[i]) * (lcm / denominator(p[i]));
  return PolyZ(std::move(z)).primitive_part();
}

}  // namespace

PolyZ poly_gcd(PolyZ a, PolyZ b) {
  if (a.is_zero()) return b.is_zero() ? PolyZ() : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  BigInt content_gcd = gcd(abs(a.content()), abs(b.content()));
  PolyQ x = to_q(a), y = to_q(b);
  while (!y.empty()) {
    PolyQ r = rem_q(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  PolyZ g = from_q_primitive(x);
  return g * PolyZ(content_gcd);
}

RationalFunctionOfN::RationalFunctionOfN(const BigRat& q)
    : num_(numerator(q)), den_(denominator(q)) {}

RationalFunctionOfN::RationalFunctionOfN(PolyZ num) : num_(std::move(num)), den_(BigInt(1)) {}

RationalFunctionOfN::RationalFunctionOfN(PolyZ num, PolyZ den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("RationalFunctionOfN: zero denominator");
  normalize();
}

RationalFunctionOfN RationalFunctionOfN::monomial_N(int power, BigInt coeff) {
  if (power >= 0) return RationalFunctionOfN(PolyZ::monomial(power, std::move(coeff)));
  return RationalFunctionOfN(PolyZ(std::move(coeff)), PolyZ::monomial(-power));
}

void RationalFunctionOfN::normalize() {
  if (num_.is_zero()) {
    den_ = PolyZ(BigInt(1));
    return;
  }
  PolyZ g = poly_gcd(num_, den_);
  num_ = num_.divide_exact(g);
  den_ = den_.divide_exact(g);
  // primitive gcd may leave coprime integer contents unreduced
  BigInt cn = abs(num_.content()), cd = abs(den_.content());
  BigInt cg = gcd(cn, cd);
  if (cg > 1) {
    num_ = num_.divide_exact(PolyZ(cg));
    den_ = den_.divide_exact(PolyZ(cg));
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

int RationalFunctionOfN::degree() const {
  if (is_zero()) throw DomainError("RationalFunctionOfN::degree of zero");
  return num_.degree() - den_.degree();
}

BigRat RationalFunctionOfN::evaluate_at(const BigInt& N) const {
  BigInt d = den_.evaluate_int(N);
  if (d == 0) throw SingularError("RationalFunctionOfN: pole at requested N");
  return BigRat(num_.evaluate_int(N), d);
}

RationalFunctionOfN RationalFunctionOfN::operator-() const {
  RationalFunctionOfN r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunctionOfN operator+(const RationalFunctionOfN& a, const RationalFunctionOfN& b) {
  return RationalFunctionOfN(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunctionOfN operator-(const RationalFunctionOfN& a, const RationalFunctionOfN& b) {
  return RationalFunctionOfN(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunctionOfN operator*(const RationalFunctionOfN& a, const RationalFunctionOfN& b) {
  return RationalFunctionOfN(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunctionOfN operator/(const RationalFunctionOfN& a, const RationalFunctionOfN& b) {
  if (b.is_zero()) throw DomainError("RationalFunctionOfN: division by zero");
  return RationalFunctionOfN(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunctionOfN::to_string() const {
  if (is_zero()) return "0";
  std::string s = num_.to_string();
  if (den_ == PolyZ(BigInt(1))) return s;
  return "(" + s + ")/(" + den_.to_string() + ")";
}

std::vector<RationalFunctionOfN> solve_linear_system(std::vector<std::vector<PolyZ>> A,
                                                     std::vector<PolyZ> b) {
  const std::size_t n = A.size();
  if (n == 0) return {};
  for (auto& row : A)
    if (row.size() != n) throw DomainError("solve_linear_system: non-square matrix");
  if (b.size() != n) throw DomainError("solve_linear_system: rhs size mismatch");

  // Bareiss fraction-free forward elimination on [A | b].
  for (std::size_t i = 0; i < n; ++i) A[i].push_back(std::move(b[i]));
  PolyZ prev_pivot(BigInt(1));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && A[pivot][k].is_zero()) ++pivot;
    if (pivot == n) throw SingularError("solve_linear_system: singular matrix");
    if (pivot != k) std::swap(A[pivot], A[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j)
        A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]).divide_exact(prev_pivot);
      A[i][k] = PolyZ();
    }
    prev_pivot = A[k][k];
  }

  std::vector<RationalFunctionOfN> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    RationalFunctionOfN acc(A[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= RationalFunctionOfN(A[ii][j]) * x[j];
    x[ii] = acc / RationalFunctionOfN(A[ii][ii]);
  }
  return x;
}

}  // namespace lvr
