#pragma once

#include <string>
#include <utility>
#include <vector>

#include "popstack/bigint.hpp"

namespace popstack {

// Dense univariate polynomial with exact integer coefficients, ascending
// degree, no trailing zeros; the empty coefficient list is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const BigInt& constant);  // NOLINT: constants convert implicitly
  Polynomial(long constant) : Polynomial(BigInt(constant)) {}
  explicit Polynomial(std::vector<BigInt> coeffs);

  static Polynomial x();
  static Polynomial monomial(const BigInt& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const BigInt& coeff(int i) const;
  const BigInt& leading() const { return c_.back(); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial&) const = default;

  BigInt eval(const BigInt& at) const;
  BigRat eval(const BigRat& at) const;

  BigInt content() const;
  Polynomial primitive_part() const;

  // Fraction-free division: lc(b)^(deg a - deg b + 1) * a = q * b + r.
  static std::pair<Polynomial, Polynomial> pseudo_divmod(const Polynomial& a,
                                                         const Polynomial& b);
  // Throws std::domain_error unless b divides a exactly.
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b);
  // Nonnegative-leading gcd, including integer content.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<BigInt> c_;
  void strip();
};

Polynomial operator*(const BigInt& c, const Polynomial& p);

// Quotient of integer polynomials, reduced to lowest terms. The sign is
// normalized so the denominator's constant term is negative (the form the
// sortable-permutation generating functions take); a denominator vanishing
// at 0 falls back to a positive leading coefficient.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;

  // Requires num(0) == 0.
  RationalFunction divided_by_x() const;

  bool operator==(const RationalFunction& o) const;

 private:
  Polynomial num_, den_;
  void reduce();
};

}  // namespace popstack
