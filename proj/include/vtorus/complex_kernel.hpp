#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace vtorus {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* where) {
  if (!is_finite(z)) {
    throw std::domain_error(std::string(where) + ": non-finite complex input");
  }
}

/// Principal square root.  Cut on the negative real axis; on the cut the
/// value is +i*sqrt(|x|), independent of the sign of the zero imaginary part.
inline Complex sqrt_principal(Complex z) {
  require_finite(z, "sqrt_principal");
  if (z.imag() == 0.0) {
    z = Complex(z.real(), +0.0);  // ties break toward the upper half plane
  }
  return std::sqrt(z);
}

/// Inverse Joukowski map: the solution h of h + 1/h = 2z with |h| >= 1.
/// Among z +/- sqrt(z^2-1) the candidate of larger modulus is returned, so
/// the dominant term never cancels; on [-1,1] both candidates are
/// unimodular and the principal-root candidate z + sqrt_principal(z^2-1)
/// is returned.
inline Complex joukowski_inverse(Complex z) {
  require_finite(z, "joukowski_inverse");
  // (z-1)(z+1) instead of z^2-1: keeps full relative accuracy near +-1.
  const Complex s = sqrt_principal((z - 1.0) * (z + 1.0));
  const Complex plus = z + s;
  const Complex minus = z - s;
  return std::norm(plus) >= std::norm(minus) ? plus : minus;
}

/// log|h(z)|: the Green function of [-1,1] with pole at infinity,
/// nonnegative on all of C and zero exactly on [-1,1].
inline double log_h(Complex z) {
  return std::log(std::abs(joukowski_inverse(z)));
}

}  // namespace vtorus
