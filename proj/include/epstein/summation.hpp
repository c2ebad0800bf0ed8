#pragma once

#include <cmath>
#include <complex>
#include <span>

namespace epstein {

using Complex = std::complex<double>;

/// Compensated summation of real numbers. Uses Neumaier's variant of
/// Kahan's algorithm, which also recovers terms larger than the running sum.
class KahanAccumulator {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Real and imaginary parts carry separate compensators.
class ComplexKahanAccumulator {
 public:
  void add(Complex v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  KahanAccumulator re_;
  KahanAccumulator im_;
};

Complex kahan_sum(std::span<const Complex> terms);
double kahan_sum(std::span<const double> terms);

}  // namespace epstein
