#include "swfront/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swfront::elliptic {

namespace {

constexpr double kErrTol = 1e-4;   // duplication cutoff; series error ~ tol^6
constexpr int kMaxIter = 200;

void check_rf_args(double x, double y, double z) {
    if (x < 0 || y < 0 || z < 0)
        throw std::domain_error("carlson_rf: arguments must be non-negative");
    if (x + y == 0 || y + z == 0 || z + x == 0)
        throw std::domain_error("carlson_rf: at most one argument may be zero");
}

} // namespace

double carlson_rf(double x, double y, double z) {
    check_rf_args(x, y, z);
    double u = 0;
    for (int it = 0; it < kMaxIter; ++it) {
        u = (x + y + z) / 3.0;
        const double dx = (u - x) / u, dy = (u - y) / u, dz = (u - z) / u;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < kErrTol) {
            const double e2 = dx * dy - dz * dz;
            const double e3 = dx * dy * dz;
            return (1.0 + e2 * (e2 / 24.0 - e3 * 3.0 / 44.0 - 0.1) + e3 / 14.0) /
                   std::sqrt(u);
        }
        const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const double lam = sy * (sx + sz) + sz * sx;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
    }
    throw std::runtime_error("carlson_rf: duplication did not converge");
}

double carlson_rc(double x, double y) {
    if (x < 0 || y <= 0) throw std::domain_error("carlson_rc: requires x >= 0, y > 0");
    for (int it = 0; it < kMaxIter; ++it) {
        const double u = (x + 2.0 * y) / 3.0;
        const double s = (y - x) / (3.0 * u);
        if (std::abs(s) < 2e-4) {
            // series: 1 + 3/10 s^2 + 1/7 s^3 + 3/8 s^4 + 9/22 s^5
            const double w =
                1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * 9.0 / 22.0)));
            return w / std::sqrt(u);
        }
        const double lam = 2.0 * std::sqrt(x) * std::sqrt(y) + y;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
    }
    throw std::runtime_error("carlson_rc: duplication did not converge");
}

double carlson_rj(double x, double y, double z, double p) {
    if (x < 0 || y < 0 || z < 0 || p <= 0)
        throw std::domain_error("carlson_rj: requires x,y,z >= 0 and p > 0");
    if (x + y == 0 || y + z == 0 || z + x == 0)
        throw std::domain_error("carlson_rj: at most one of x,y,z may be zero");

    double sum = 0.0;
    double fac = 1.0;
    for (int it = 0; it < kMaxIter; ++it) {
        const double u = (x + y + z + 2.0 * p) / 5.0;
        const double dx = (u - x) / u, dy = (u - y) / u, dz = (u - z) / u,
                     dp = (u - p) / u;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz), std::abs(dp)}) <
            kErrTol) {
            // degree-5 Taylor expansion about the symmetric point
            const double ea = dx * (dy + dz) + dy * dz;
            const double eb = dx * dy * dz;
            const double ec = dp * dp;
            const double ed = ea - 3.0 * ec;
            const double ee = eb + 2.0 * dp * (ea - ec);
            const double series =
                1.0 +
                ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 9.0 / 52.0 * ee) +
                eb * (1.0 / 6.0 + dp * (-3.0 / 11.0 + dp * 3.0 / 26.0)) +
                dp * ea * (1.0 / 3.0 - dp * 3.0 / 22.0) - dp * ec / 3.0;
            return sum + fac * series / (u * std::sqrt(u));
        }
        const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const double lam = sy * (sx + sz) + sz * sx;
        const double alpha = p * (sx + sy + sz) + sx * sy * sz;
        const double beta = p * (p + lam) * (p + lam);
        sum += 3.0 * fac * carlson_rc(alpha * alpha, beta);
        fac *= 0.25;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        p = 0.25 * (p + lam);
    }
    throw std::runtime_error("carlson_rj: duplication did not converge");
}

double ellint_f(double phi, double k) {
    if (!(phi >= 0.0 && phi <= std::numbers::pi / 2 + 1e-14))
        throw std::domain_error("ellint_f: amplitude must lie in [0, pi/2]");
    if (!(k >= 0.0 && k < 1.0))
        throw std::domain_error("ellint_f: modulus must lie in [0, 1)");
    const double s = std::sin(phi);
    const double c2 = 1.0 - s * s;
    return s * carlson_rf(c2, 1.0 - k * k * s * s, 1.0);
}

double ellint_pi(double n, double phi, double k) {
    if (!(phi >= 0.0 && phi <= std::numbers::pi / 2 + 1e-14))
        throw std::domain_error("ellint_pi: amplitude must lie in [0, pi/2]");
    if (!(k >= 0.0 && k < 1.0))
        throw std::domain_error("ellint_pi: modulus must lie in [0, 1)");
    if (!(n < 1.0))
        throw std::domain_error("ellint_pi: characteristic must satisfy n < 1");
    const double s = std::sin(phi);
    const double s2 = s * s;
    const double c2 = 1.0 - s2;
    const double q = 1.0 - k * k * s2;
    double value = s * carlson_rf(c2, q, 1.0);
    if (n != 0.0)
        value += n / 3.0 * s * s2 * carlson_rj(c2, q, 1.0, 1.0 - n * s2);
    return value;
}

} // namespace swfront::elliptic
