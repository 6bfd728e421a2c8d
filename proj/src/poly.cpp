#include "popstack/poly.hpp"

#include <stdexcept>

namespace popstack {

namespace {
const BigInt kZero = 0;
}

Polynomial::Polynomial(const BigInt& constant) {
  if (constant != 0) c_.push_back(constant);
}

Polynomial::Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  strip();
}

Polynomial Polynomial::x() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const BigInt& c, int deg) {
  if (c == 0) return Polynomial();
  std::vector<BigInt> v(deg + 1);
  v[deg] = c;
  return Polynomial(std::move(v));
}

void Polynomial::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<BigInt> v(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  std::vector<BigInt> v(c_);
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial operator*(const BigInt& c, const Polynomial& p) {
  std::vector<BigInt> v(p.coeffs());
  for (auto& ci : v) ci *= c;
  return Polynomial(std::move(v));
}

BigInt Polynomial::eval(const BigInt& at) const {
  BigInt r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * at + c_[i];
  return r;
}

BigRat Polynomial::eval(const BigRat& at) const {
  BigRat r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * at + BigRat(c_[i]);
  return r;
}

BigInt Polynomial::content() const {
  BigInt g = 0;
  for (const BigInt& c : c_) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? BigInt(-g) : g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return Polynomial();
  BigInt g = content();
  std::vector<BigInt> v(c_);
  for (auto& c : v) c /= g;
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::pseudo_divmod(const Polynomial& a,
                                                            const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial q, r = a;
  const BigInt& d = b.leading();
  int e = a.degree() - b.degree() + 1;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Polynomial s = monomial(r.leading(), r.degree() - b.degree());
    q = d * q + s;
    r = d * r - s * b;
    --e;
  }
  BigInt scale = 1;
  for (int i = 0; i < e; ++i) scale *= d;
  return {scale * q, scale * r};
}

Polynomial Polynomial::exact_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return Polynomial();
  Polynomial q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    BigInt c = r.leading() / b.leading();
    if (c * b.leading() != r.leading())
      throw std::domain_error("polynomial division is not exact");
    Polynomial s = monomial(c, r.degree() - b.degree());
    q = q + s;
    r = r - s * b;
  }
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return Polynomial();
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  BigInt cont = boost::multiprecision::gcd(a.content(), b.content());
  Polynomial pa = a.primitive_part(), pb = b.primitive_part();
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Polynomial r = pseudo_divmod(pa, pb).second;
    pa = std::move(pb);
    pb = r.is_zero() ? Polynomial() : r.primitive_part();
  }
  Polynomial g = cont * pa;
  return g.leading() < 0 ? -g : g;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    BigInt mag = c < 0 ? BigInt(-c) : c;
    bool want_coeff = mag != 1 || i == 0;
    if (want_coeff) s += mag.str();
    if (i > 0) {
      if (want_coeff) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  num_ = Polynomial::exact_div(num_, g);
  den_ = Polynomial::exact_div(den_, g);
  bool flip = den_.coeff(0) != 0 ? den_.coeff(0) > 0 : den_.leading() < 0;
  if (flip) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::divided_by_x() const {
  if (is_zero()) return RationalFunction();
  if (num_.coeff(0) != 0)
    throw std::domain_error("numerator has a nonzero constant term");
  std::vector<BigInt> shifted(num_.coeffs().begin() + 1, num_.coeffs().end());
  return RationalFunction(Polynomial(std::move(shifted)), den_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

}  // namespace popstack
