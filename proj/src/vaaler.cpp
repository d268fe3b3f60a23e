#include "zetalab/vaaler.hpp"

#include <cmath>
#include <stdexcept>

namespace zetalab {

namespace {
constexpr double kPi = 3.14159265358979323846;

double kernel_closed_form(int order, int denom_weight, double x) {
    // (1/(2H+2)) * (1/W) * (sin(pi W x)/sin(pi x))^2 with W = denom_weight,
    // summing |h| <= W-1 of (1 - |h|/W) e(hx); `order` only sets 1/(2H+2)
    double sx = std::sin(kPi * x);
    if (std::fabs(sx) < 1e-12) return static_cast<double>(denom_weight) / (2.0 * order + 2.0);
    double num = std::sin(kPi * denom_weight * x);
    return num * num / (denom_weight * sx * sx) / (2.0 * order + 2.0);
}

double kernel_direct(int order, int denom_weight, double x) {
    double s = 1.0;
    for (int h = 1; h < denom_weight; ++h)
        s += 2.0 * (1.0 - static_cast<double>(h) / denom_weight) * std::cos(2.0 * kPi * h * x);
    return s / (2.0 * order + 2.0);
}
} // namespace

double psi_sawtooth(double t) {
    double frac = t - std::floor(t);
    return frac - 0.5;
}

double VaalerApprox::gamma_abs(int h) const {
    if (h == 0 || std::abs(h) > H) return 0.0;
    return 0.5 * std::fabs(sin_coeff[static_cast<size_t>(std::abs(h)) - 1]);
}

VaalerApprox vaaler_build(int H) {
    if (H < 1) throw std::invalid_argument("vaaler_build: H >= 1");
    VaalerApprox a;
    a.H = H;
    a.sin_coeff.resize(H);
    for (int h = 1; h <= H; ++h) {
        double t = static_cast<double>(h) / (H + 1); // in (0, 1)
        double jhat = kPi * t * (1.0 - t) / std::tan(kPi * t) + t;
        a.sin_coeff[h - 1] = jhat / (kPi * h);
    }
    return a;
}

double psi_star(const VaalerApprox& approx, double x) {
    double s = 0.0;
    for (int h = approx.H; h >= 1; --h)
        s -= approx.sin_coeff[h - 1] * std::sin(2.0 * kPi * h * x);
    return s;
}

double fejer_majorant(int H, double x) { return kernel_closed_form(H, H, x); }

double vaaler_majorant(int H, double x) { return kernel_closed_form(H, H + 1, x); }

double fejer_majorant_direct(int H, double x) { return kernel_direct(H, H, x); }

double vaaler_majorant_direct(int H, double x) { return kernel_direct(H, H + 1, x); }

} // namespace zetalab
