#include "swfront/bathymetry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace swfront::bathy {

namespace {

void require_finite(const std::vector<double>& c) {
    for (double v : c)
        if (!std::isfinite(v)) throw std::domain_error("bottom coefficients must be finite");
}

} // namespace

BottomProfile::BottomProfile(ProfileKind kind, std::vector<double> coeffs)
    : kind_(kind), coeffs_(std::move(coeffs)) {
    require_finite(coeffs_);
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

BottomProfile BottomProfile::flat(double depth) {
    if (!(depth > 0.0)) throw std::domain_error("flat profile requires depth Q > 0");
    return BottomProfile(ProfileKind::Flat, {-depth});
}

BottomProfile BottomProfile::linear(double c0, double c1) {
    return BottomProfile(ProfileKind::Linear, {c0, c1});
}

BottomProfile BottomProfile::quadratic(double c0, double c1, double c2) {
    return BottomProfile(ProfileKind::Quadratic, {c0, c1, c2});
}

BottomProfile BottomProfile::quartic(double c0, double c2, double c4) {
    return BottomProfile(ProfileKind::Quartic, {c0, 0.0, 0.5 * c2, 0.0, 0.25 * c4});
}

BottomProfile BottomProfile::polynomial(std::vector<double> coeffs, int degree_cap) {
    if (coeffs.empty()) throw std::domain_error("polynomial profile needs coefficients");
    if (coeffs.size() > 1 && coeffs.back() == 0.0)
        throw std::domain_error("polynomial profile: trailing coefficient must be nonzero");
    if (static_cast<int>(coeffs.size()) - 1 > degree_cap)
        throw std::domain_error("polynomial profile: degree exceeds cap " +
                                std::to_string(degree_cap));
    return BottomProfile(ProfileKind::Polynomial, std::move(coeffs));
}

double BottomProfile::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double BottomProfile::derivative(double x, int order) const {
    if (order < 0) throw std::domain_error("derivative order must be >= 0");
    if (order == 0) return eval(x);
    if (order > degree()) return 0.0;
    // synthetic differentiation `order` times, then Horner
    std::vector<double> c = coeffs_;
    for (int d = 0; d < order; ++d) {
        for (std::size_t k = 1; k < c.size(); ++k)
            c[k - 1] = static_cast<double>(k) * c[k];
        c.pop_back();
    }
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<double> BottomProfile::taylor_coeffs(double x, int n) const {
    if (n < 0) throw std::domain_error("taylor_coeffs: order must be >= 0");
    // repeated synthetic division by (y - x); the k-th remainder is
    // (1/k!) b^(k)(x). Coefficients past the degree are exactly zero.
    std::vector<double> c = coeffs_;
    std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= std::min(n, degree()); ++k) {
        std::vector<double> q(c.size() - 1);
        double rem = c.back();
        for (int j = static_cast<int>(c.size()) - 2; j >= 0; --j) {
            q[static_cast<std::size_t>(j)] = rem;
            rem = c[static_cast<std::size_t>(j)] + rem * x;
        }
        out[static_cast<std::size_t>(k)] = rem;
        c = std::move(q);
        if (c.empty()) break;
    }
    return out;
}

std::string BottomProfile::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case ProfileKind::Flat: os << "flat"; break;
        case ProfileKind::Linear: os << "linear"; break;
        case ProfileKind::Quadratic: os << "quadratic"; break;
        case ProfileKind::Quartic: os << "quartic"; break;
        case ProfileKind::Polynomial: os << "polynomial"; break;
    }
    os << " [";
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        os << (i ? ", " : "") << coeffs_[i];
    os << "]";
    return os.str();
}

ScalingRecord nondimensionalize(double kappa, double depth, double gravity) {
    if (!(kappa > 0.0) || !(depth > 0.0) || !(gravity > 0.0))
        throw std::domain_error("nondimensionalize: kappa, Q, g must all be positive");
    ScalingRecord s;
    s.length = std::sqrt(depth / kappa);
    s.time = 1.0 / std::sqrt(gravity * kappa);
    s.velocity = s.length * std::sqrt(gravity * kappa);
    s.height = kappa * s.length * s.length;
    return s;
}

} // namespace swfront::bathy
