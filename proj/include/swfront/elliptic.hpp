#ifndef SWFRONT_ELLIPTIC_HPP
#define SWFRONT_ELLIPTIC_HPP

namespace swfront::elliptic {

// Carlson's symmetric elliptic integrals, computed with the standard
// duplication algorithm.
//
//   R_F(x,y,z)   = 1/2 int_0^inf [(t+x)(t+y)(t+z)]^{-1/2} dt
//   R_C(x,y)     = R_F(x,y,y)
//   R_J(x,y,z,p) = 3/2 int_0^inf [(t+x)(t+y)(t+z)]^{-1/2} (t+p)^{-1} dt
//
// Arguments must be non-negative (p strictly positive for R_J); at most one
// of x,y,z may vanish.
double carlson_rf(double x, double y, double z);
double carlson_rc(double x, double y);
double carlson_rj(double x, double y, double z, double p);

// Legendre incomplete integrals of the first and third kind,
//
//   F(phi,k)      = int_0^phi dtheta / sqrt(1 - k^2 sin^2 theta)
//   Pi(n;phi,k)   = int_0^phi dtheta / [(1 - n sin^2 theta) sqrt(1 - k^2 sin^2 theta)]
//
// on the real nonsingular branch: 0 <= phi <= pi/2, 0 <= k < 1, n < 1.
// Negative characteristic n is fully supported.
double ellint_f(double phi, double k);
double ellint_pi(double n, double phi, double k);

} // namespace swfront::elliptic

#endif
