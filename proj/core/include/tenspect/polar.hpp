#pragma once

#include <complex>

namespace tenspect {

using Complex = std::complex<double>;

/// Polar form (modulus, principal angle) of a complex number.
///
/// The angle lives in the half-open interval (-pi, pi]. The zero value is
/// canonical: modulus 0 forces angle 0.
struct PolarComplex {
  double modulus = 0.0;
  double angle = 0.0;

  Complex to_complex() const;
};

/// Reduces an arbitrary angle (radians) into (-pi, pi].
double principal_angle(double theta);

/// Polar decomposition with the full four-quadrant principal argument.
PolarComplex to_polar(Complex z);

/// Order-p conjugate of a scalar:
///
///   z ^ {c_p^j} = |z| * exp{ i * angle(z) * exp(i*2*pi*j/p) }
///
/// j is taken modulo p. j == 0 (mod p) returns z unchanged and, for even p,
/// j == p/2 returns the ordinary complex conjugate; both identities hold
/// exactly. The angle is always taken from the principal argument of z
/// itself, never from an iterated conjugate.
Complex order_conjugate(Complex z, int p, long j);

}  // namespace tenspect
