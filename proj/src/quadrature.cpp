#include "swapsim/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swapsim {

GaussLegendre gauss_legendre01(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre01: n must be >= 1");
    GaussLegendre gl;
    gl.x.resize(n);
    gl.w.resize(n);
    // Roots of P_n on [-1, 1] by Newton from the Chebyshev-like initial guess,
    // then mapped to [0, 1]. Exploits root symmetry about 0.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // recurrence for P_n(x) and P_{n-1}(x)
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        gl.x[i] = 0.5 * (1.0 - x);  // descending root -> ascending node
        gl.w[i] = 0.5 * w;
        gl.x[n - 1 - i] = 0.5 * (1.0 + x);
        gl.w[n - 1 - i] = 0.5 * w;
    }
    return gl;
}

namespace {

using Cplx = std::complex<double>;

Cplx simpson(double a, double b, const Cplx& fa, const Cplx& fm, const Cplx& fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

Cplx simpson_recurse(const std::function<Cplx(double)>& f, double a, double b, const Cplx& fa,
                     const Cplx& fm, const Cplx& fb, const Cplx& whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const Cplx fl = f(0.5 * (a + m));
    const Cplx fr = f(0.5 * (m + b));
    const Cplx left = simpson(a, m, fa, fl, fm);
    const Cplx right = simpson(m, b, fm, fr, fb);
    const Cplx delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_recurse(f, a, m, fa, fl, fm, left, tol / 2.0, depth - 1) +
           simpson_recurse(f, m, b, fm, fr, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

std::complex<double> adaptive_simpson(const std::function<std::complex<double>(double)>& f,
                                      double a, double b, double abs_tol) {
    if (a == b) return {0.0, 0.0};
    const Cplx fa = f(a);
    const Cplx fb = f(b);
    const Cplx fm = f(0.5 * (a + b));
    const Cplx whole = simpson(a, b, fa, fm, fb);
    return simpson_recurse(f, a, b, fa, fm, fb, whole, abs_tol, 40);
}

double HaarSampler::uniform01() {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

HaarPoint HaarSampler::next() {
    HaarPoint p;
    const double x1 = uniform01();
    p.phi1 = 2.0 * std::numbers::pi * uniform01();
    const double x2 = uniform01();
    p.phi2 = 2.0 * std::numbers::pi * uniform01();
    p.theta1 = 2.0 * std::acos(std::sqrt(x1));
    p.theta2 = 2.0 * std::acos(std::sqrt(x2));
    return p;
}

}  // namespace swapsim
