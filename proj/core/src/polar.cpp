#include "tenspect/polar.hpp"

#include <cmath>
#include <stdexcept>

namespace tenspect {

Complex PolarComplex::to_complex() const {
  return {modulus * std::cos(angle), modulus * std::sin(angle)};
}

double principal_angle(double theta) {
  if (theta > M_PI || theta <= -M_PI) {
    theta = std::remainder(theta, 2.0 * M_PI);
    if (theta <= -M_PI) theta = M_PI;  // remainder may land on -pi
  }
  return theta;
}

PolarComplex to_polar(Complex z) {
  const double r = std::abs(z);
  if (r == 0.0) return {0.0, 0.0};
  double theta = std::atan2(z.imag(), z.real());
  if (theta <= -M_PI) theta = M_PI;  // atan2(-0.0, negative) gives -pi
  return {r, theta};
}

Complex order_conjugate(Complex z, int p, long j) {
  if (p < 2) throw std::invalid_argument("order_conjugate: p must be >= 2");
  long jm = j % p;
  if (jm < 0) jm += p;
  if (jm == 0) return z;                       // exp(i*2*pi) = 1
  if (2 * jm == p) return std::conj(z);        // exp(i*pi) = -1
  const PolarComplex zp = to_polar(z);
  const double phase = 2.0 * M_PI * static_cast<double>(jm) / p;
  const double r = zp.modulus * std::exp(-zp.angle * std::sin(phase));
  const double theta = zp.angle * std::cos(phase);
  return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace tenspect
