#include "popstack/gf.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace popstack {

namespace {

// Fraction-free Gaussian elimination; exact divisions by the previous pivot.
Polynomial bareiss_det(std::vector<std::vector<Polynomial>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return Polynomial(1);
  Polynomial prev(1);
  int sign = 1;
  for (int col = 0; col + 1 < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Polynomial();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      sign = -sign;
    }
    for (int r = col + 1; r < n; ++r) {
      for (int c = col + 1; c < n; ++c)
        m[r][c] = Polynomial::exact_div(m[col][col] * m[r][c] - m[r][col] * m[col][c],
                                        prev);
      m[r][col] = Polynomial();
    }
    prev = m[col][col];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

RationalFunction gf_of_dfa(const Dfa& d) {
  int n = static_cast<int>(d.num_states());
  // m(q, q') = number of symbols leading from q to q'.
  std::vector<std::vector<BigInt>> counts(n, std::vector<BigInt>(n, 0));
  for (int s = 0; s < n; ++s)
    for (int a = 0; a < d.alphabet_size; ++a) {
      State t = d.next(s, a);
      if (t != kNoState) counts[s][t] += 1;
    }
  auto system_matrix = [&] {
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<BigInt> coeffs{i == j ? 1 : 0, -counts[i][j]};
        m[i][j] = Polynomial(std::move(coeffs));
      }
    return m;
  };
  Polynomial den = bareiss_det(system_matrix());
  auto replaced = system_matrix();
  for (int i = 0; i < n; ++i)
    replaced[i][d.initial] = Polynomial(BigInt(d.accepting[i] ? 1 : 0));
  Polynomial num = bareiss_det(std::move(replaced));
  if (den.is_zero()) throw std::domain_error("singular transfer system");
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction sortable_gf(int k, const PipelineOptions& opts) {
  return gf_of_dfa(build_sorting_plan_dfa(k, opts)).divided_by_x();
}

std::vector<BigInt> series(const RationalFunction& f, int n) {
  if (n < 0) throw std::invalid_argument("series length must be >= 0");
  if (f.den().coeff(0) == 0)
    throw std::invalid_argument("series requires den(0) != 0");
  std::vector<BigRat> r(n + 1);
  BigRat d0(f.den().coeff(0));
  for (int j = 0; j <= n; ++j) {
    BigRat acc(f.num().coeff(j));
    for (int i = 1; i <= std::min(j, f.den().degree()); ++i)
      acc -= BigRat(f.den().coeff(i)) * r[j - i];
    r[j] = acc / d0;
  }
  std::vector<BigInt> out(n + 1);
  for (int j = 0; j <= n; ++j) {
    if (boost::multiprecision::denominator(r[j]) != 1)
      throw std::domain_error("series coefficient is not an integer");
    out[j] = boost::multiprecision::numerator(r[j]);
  }
  return out;
}

namespace {

std::vector<std::complex<double>> durand_kerner(const std::vector<double>& monic) {
  int deg = static_cast<int>(monic.size()) - 1;
  auto eval = [&](std::complex<double> z) {
    std::complex<double> r = 0;
    for (int i = deg; i >= 0; --i) r = r * z + monic[i];
    return r;
  };
  std::vector<std::complex<double>> z(deg);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> cur = 1.0;
  for (int i = 0; i < deg; ++i) {
    cur *= seed;
    z[i] = cur;
  }
  for (int sweep = 0; sweep < 1000; ++sweep) {
    double worst = 0;
    for (int i = 0; i < deg; ++i) {
      std::complex<double> denom = 1.0;
      for (int j = 0; j < deg; ++j)
        if (j != i) denom *= z[i] - z[j];
      std::complex<double> step = eval(z[i]) / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

}  // namespace

double growth_rate(const RationalFunction& f) {
  const Polynomial& q = f.den();
  if (q.degree() < 1)
    throw std::invalid_argument("growth rate requires a nonconstant denominator");
  if (q.coeff(0) == 0)
    throw std::domain_error("denominator vanishes at 0");
  int deg = q.degree();
  std::vector<double> monic(deg + 1);
  double lead = q.leading().convert_to<double>();
  for (int i = 0; i <= deg; ++i)
    monic[i] = q.coeff(i).convert_to<double>() / lead;
  auto roots = durand_kerner(monic);
  double best = std::abs(roots[0]);
  std::complex<double> dominant = roots[0];
  for (const auto& z : roots) {
    if (std::abs(z) < best) {
      best = std::abs(z);
      dominant = z;
    }
  }
  // Certified polish of a real dominant root via exact sign evaluation.
  if (std::abs(dominant.imag()) < 1e-8 * (1.0 + std::abs(dominant.real()))) {
    double t = dominant.real();
    auto sign_at = [&](double v) {
      BigRat r = q.eval(BigRat(v));
      return r == 0 ? 0 : (r > 0 ? 1 : -1);
    };
    for (double delta = 1e-9; delta <= 1e-3; delta *= 4) {
      double lo = t - delta, hi = t + delta;
      int slo = sign_at(lo), shi = sign_at(hi);
      if (slo == 0) return 1.0 / std::abs(lo);
      if (shi == 0) return 1.0 / std::abs(hi);
      if (slo != shi) {
        for (int it = 0; it < 80 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++it) {
          double mid = 0.5 * (lo + hi);
          int sm = sign_at(mid);
          if (sm == 0) return 1.0 / std::abs(mid);
          if (sm == slo)
            lo = mid;
          else
            hi = mid;
        }
        return 1.0 / std::abs(0.5 * (lo + hi));
      }
    }
  }
  return 1.0 / best;
}

}  // namespace popstack
