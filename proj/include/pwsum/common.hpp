#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace pwsum {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// Raised when a computation cannot meet its numerical preconditions
// (infeasible contour, uncontrolled tail, budget overrun).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Product accumulator with a separate binary exponent, so long products
// of large and small factors neither overflow nor underflow midway.
class ScaledProduct {
 public:
  void mul(cplx f) {
    m_ *= f;
    if (++since_ >= 16) renorm();
  }
  // multiply by exp(lf)
  void mul_exp(cplx lf) {
    const double ln2 = std::log(2.0);
    double e = std::floor(lf.real() / ln2);
    exp2_ += static_cast<long>(e);
    m_ *= std::polar(std::exp(lf.real() - e * ln2), lf.imag());
    renorm();
  }
  cplx value() const {
    long e = std::clamp(exp2_, -3000L, 3000L);
    return {std::ldexp(m_.real(), static_cast<int>(e)), std::ldexp(m_.imag(), static_cast<int>(e))};
  }
  double log_abs() const {
    double a = std::abs(m_);
    if (a == 0.0) return -INFINITY;
    return std::log(a) + static_cast<double>(exp2_) * std::log(2.0);
  }

 private:
  void renorm() {
    since_ = 0;
    double a = std::max(std::abs(m_.real()), std::abs(m_.imag()));
    if (a == 0.0 || !std::isfinite(a)) return;
    int e;
    std::frexp(a, &e);
    m_ = {std::ldexp(m_.real(), -e), std::ldexp(m_.imag(), -e)};
    exp2_ += e;
  }

  cplx m_{1.0, 0.0};
  long exp2_ = 0;
  int since_ = 0;
};

}  // namespace pwsum
