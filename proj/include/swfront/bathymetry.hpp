#ifndef SWFRONT_BATHYMETRY_HPP
#define SWFRONT_BATHYMETRY_HPP

#include <string>
#include <vector>

namespace swfront::bathy {

enum class ProfileKind { Flat, Linear, Quadratic, Quartic, Polynomial };

// Polynomial bottom topography b(x) with exact derivatives of all orders.
// Stored in the monomial basis; evaluation by Horner, derivatives by repeated
// synthetic differentiation of the coefficient list.
//
// Variant conventions:
//   Flat(Q)              b(x) = -Q, Q > 0
//   Linear(c0, c1)       b(x) = c0 + c1 x
//   Quadratic(c0,c1,c2)  b(x) = c0 + c1 x + c2 x^2
//   Quartic(c0,c2,c4)    b(x) = c0 + (c2/2) x^2 + (c4/4) x^4  (Duffing normalization)
//   Polynomial(a)        b(x) = a0 + a1 x + ... + ad x^d, trailing ad != 0
class BottomProfile {
public:
    static constexpr int kDefaultDegreeCap = 8;

    static BottomProfile flat(double depth);
    static BottomProfile linear(double c0, double c1);
    static BottomProfile quadratic(double c0, double c1, double c2);
    static BottomProfile quartic(double c0, double c2, double c4);
    static BottomProfile polynomial(std::vector<double> coeffs,
                                    int degree_cap = kDefaultDegreeCap);

    ProfileKind kind() const { return kind_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    double eval(double x) const;
    double operator()(double x) const { return eval(x); }

    // d^order b / dx^order at x
    double derivative(double x, int order = 1) const;

    // Taylor coefficients b_0..b_n about x: b_k = (1/k!) d^k b/dx^k (x).
    // Entries past the polynomial degree are exactly zero.
    std::vector<double> taylor_coeffs(double x, int n) const;

    std::string describe() const;

private:
    BottomProfile(ProfileKind kind, std::vector<double> coeffs);
    ProfileKind kind_;
    std::vector<double> coeffs_;  // monomial basis, constant term first
};

// Characteristic scales removing the parameters of the dimensional parabolic
// bottom b*(x*) = kappa x*^2 - Q; in scaled variables the bottom is x^2 - 1.
struct ScalingRecord {
    double length;    // l0 = sqrt(Q/kappa)
    double time;      // 1/sqrt(g kappa)
    double velocity;  // l0 sqrt(g kappa)
    double height;    // kappa l0^2
};

ScalingRecord nondimensionalize(double kappa, double depth, double gravity);

} // namespace swfront::bathy

#endif
