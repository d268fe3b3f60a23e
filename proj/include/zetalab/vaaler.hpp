#pragma once

// The sawtooth psi(t) = {t} - 1/2 and its degree-H trigonometric
// approximation
//
//   psi*(x) = sum_{1<=|h|<=H} gamma(h) e(hx),
//   gamma(h) = -Jhat(h/(H+1)) / (2 pi i h),
//   Jhat(t)  = pi t (1-|t|) cot(pi t) + |t|,
//
// Vaaler's interpolation at the points j/(H+1).  The construction comes
// with the certified pointwise bound
//
//   |psi*(x) - psi(x)| <= (2H+2)^-1 sum_{|h|<=H} (1 - |h|/(H+1)) e(hx)
//                       = (2H+2)^-1 (H+1)^-1 (sin(pi(H+1)x)/sin(pi x))^2,
//
// tight at integers (both sides equal 1/2 there).  fejer_majorant is the
// narrower kernel with weight (1 - |h|/H): its peak H/(2H+2) falls below
// 1/2, which no 1-periodic trigonometric polynomial can meet at integer x
// (psi jumps by 1 there), so only the (H+1)-weight bound is certifiable.
// Both kernels are exposed; the verification suites report against each.

#include <vector>

namespace zetalab {

double psi_sawtooth(double t); // {t} - 1/2

struct VaalerApprox {
    int H = 0;
    // psi*(x) = -sum_{h=1}^{H} sin_coeff[h-1] * sin(2 pi h x)
    std::vector<double> sin_coeff;
    double gamma_abs(int h) const; // |gamma(h)| = sin_coeff[h-1] / 2
};

VaalerApprox vaaler_build(int H);
double psi_star(const VaalerApprox& approx, double x);

// (1/(2H+2)) sum_{|h|<=H} (1 - |h|/H) e(hx); closed form
// (1/(2H+2)) (1/H) (sin(pi H x)/sin(pi x))^2, continuity value at integers
double fejer_majorant(int H, double x);

// (1/(2H+2)) sum_{|h|<=H} (1 - |h|/(H+1)) e(hx): the certified bound of
// the construction above
double vaaler_majorant(int H, double x);

// direct |h|-sum evaluation of either weight (oracle for the closed forms)
double fejer_majorant_direct(int H, double x);
double vaaler_majorant_direct(int H, double x);

} // namespace zetalab
