#include "swapsim/qubit_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "swapsim/dynamics.hpp"

namespace swapsim {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-12;
constexpr double kEigenErrorTol = 1e-8;   // imaginary/negative part beyond this is an error
constexpr double kEigenClampTol = 1e-10;  // |lambda| below this snaps to zero

void check_angle_range(double theta, double phi, const char* what) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw std::invalid_argument(std::string(what) + ": theta must be in [0, pi]");
    }
    if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
        throw std::invalid_argument(std::string(what) + ": phi must be in [0, 2 pi)");
    }
}

}  // namespace

void QubitInit::validate() const { check_angle_range(theta, phi, "QubitInit"); }

Complex QubitInit::excited_amp() const { return {std::cos(theta / 2.0), 0.0}; }

Complex QubitInit::ground_amp() const {
    return std::sin(theta / 2.0) * Complex(std::cos(phi), std::sin(phi));
}

double PureTwoQubitState::norm_sq() const {
    return std::norm(ee) + std::norm(eg) + std::norm(ge) + std::norm(gg);
}

void PureTwoQubitState::validate() const {
    if (std::abs(norm_sq() - 1.0) > 1e-12) {
        throw std::invalid_argument("PureTwoQubitState: state is not normalized");
    }
}

PureTwoQubitState PureTwoQubitState::normalized(Complex ee, Complex eg, Complex ge, Complex gg) {
    const double n2 = std::norm(ee) + std::norm(eg) + std::norm(ge) + std::norm(gg);
    if (n2 < 1e-14) {
        throw std::domain_error("PureTwoQubitState: squared norm below 1e-14");
    }
    const double inv = 1.0 / std::sqrt(n2);
    return {ee * inv, eg * inv, ge * inv, gg * inv};
}

namespace detail {

namespace {

// x^2 + b x + c = 0, cancellation-free root pair.
void solve_quadratic(Complex b, Complex c, Complex out[2]) {
    Complex disc = std::sqrt(b * b - 4.0 * c);
    if ((std::conj(b) * disc).real() < 0.0) disc = -disc;
    const Complex q = -0.5 * (b + disc);
    out[0] = q;
    out[1] = (std::abs(q) > 0.0) ? c / q : -b;  // q == 0 only when b = c = 0
}

// x^3 + a x^2 + b x + c = 0 (Cardano, complex arithmetic throughout).
void solve_cubic(Complex a, Complex b, Complex c, Complex out[3]) {
    const Complex p = b - a * a / 3.0;
    const Complex q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    Complex u3 = -q / 2.0 + disc;
    if (std::abs(u3) < std::abs(-q / 2.0 - disc)) u3 = -q / 2.0 - disc;
    if (std::abs(u3) == 0.0) {
        out[0] = out[1] = out[2] = -a / 3.0;
        return;
    }
    const Complex u = std::pow(u3, 1.0 / 3.0);
    const Complex w(-0.5, 0.5 * std::sqrt(3.0));
    Complex uk = u;
    for (int k = 0; k < 3; ++k) {
        out[k] = uk - p / (3.0 * uk) - a / 3.0;
        uk *= w;
    }
}

// x^4 + a x^3 + b x^2 + c x + d = 0 via the resolvent cubic (Ferrari).
void solve_quartic(double a, double b, double c, double d, Complex out[4]) {
    const double p = b - 3.0 * a * a / 8.0;
    const double q = c - a * b / 2.0 + a * a * a / 8.0;
    const double r = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;
    const double shift = a / 4.0;
    if (std::abs(q) < 1e-30) {  // biquadratic
        Complex ys[2];
        solve_quadratic(Complex(p), Complex(r), ys);
        for (int k = 0; k < 2; ++k) {
            const Complex s = std::sqrt(ys[k]);
            out[2 * k] = s - shift;
            out[2 * k + 1] = -s - shift;
        }
        return;
    }
    Complex zs[3];
    solve_cubic(Complex(-p), Complex(-4.0 * r), Complex(4.0 * p * r - q * q), zs);
    Complex z = zs[0];
    for (int k = 1; k < 3; ++k) {
        if (std::abs(zs[k] - p) > std::abs(z - p)) z = zs[k];
    }
    const Complex s = std::sqrt(z - p);
    if (std::abs(s) == 0.0) {
        Complex ys[2];
        solve_quadratic(Complex(p), Complex(r), ys);
        for (int k = 0; k < 2; ++k) {
            const Complex sq = std::sqrt(ys[k]);
            out[2 * k] = sq - shift;
            out[2 * k + 1] = -sq - shift;
        }
        return;
    }
    const Complex u = (z - q / s) / 2.0;
    const Complex v = (z + q / s) / 2.0;
    Complex r1[2], r2[2];
    solve_quadratic(s, u, r1);
    solve_quadratic(-s, v, r2);
    out[0] = r1[0] - shift;
    out[1] = r1[1] - shift;
    out[2] = r2[0] - shift;
    out[3] = r2[1] - shift;
}

std::array<Complex, 16> matmul4(const std::array<Complex, 16>& a,
                                const std::array<Complex, 16>& b) {
    std::array<Complex, 16> c{};
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            const Complex aik = a[4 * i + k];
            for (int j = 0; j < 4; ++j) c[4 * i + j] += aik * b[4 * k + j];
        }
    }
    return c;
}

Complex trace4(const std::array<Complex, 16>& a) { return a[0] + a[5] + a[10] + a[15]; }

}  // namespace

std::array<Complex, 16> spin_flipped(const std::array<Complex, 16>& rho) {
    // YY = antidiag(-1, 1, 1, -1); YY rho* YY reverses both indices and flips
    // the sign when exactly one index is in {0, 3}.
    std::array<Complex, 16> out{};
    constexpr double sign[4] = {-1.0, 1.0, 1.0, -1.0};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out[4 * i + j] = sign[i] * sign[j] * std::conj(rho[4 * (3 - i) + (3 - j)]);
        }
    }
    return out;
}

std::array<double, 4> real_eigenvalues4(const std::array<Complex, 16>& matrix) {
    // Faddeev-LeVerrier coefficients from power traces.
    const auto m2 = matmul4(matrix, matrix);
    const auto m3 = matmul4(m2, matrix);
    const Complex t1 = trace4(matrix);
    const Complex t2 = trace4(m2);
    const Complex t3 = trace4(m3);
    const Complex t4 = trace4(matmul4(m3, matrix));
    const Complex c1 = t1;
    const Complex c2 = (c1 * t1 - t2) / 2.0;
    const Complex c3 = (c2 * t1 - c1 * t2 + t3) / 3.0;
    const Complex c4 = (c3 * t1 - c2 * t2 + c1 * t3 - t4) / 4.0;

    double scale = 0.0;
    for (const Complex& e : matrix) scale = std::max(scale, std::abs(e));
    const double big = std::max(1.0, scale);

    if (std::abs(c1.imag()) > kEigenErrorTol * big || std::abs(c2.imag()) > kEigenErrorTol * big ||
        std::abs(c3.imag()) > kEigenErrorTol * big || std::abs(c4.imag()) > kEigenErrorTol * big) {
        throw std::runtime_error("real_eigenvalues4: complex characteristic polynomial");
    }

    // lambda^4 + a lambda^3 + b lambda^2 + c lambda + d
    const double coeff[5] = {1.0, -c1.real(), c2.real(), -c3.real(), c4.real()};

    // Trailing coefficients at rounding level are exact zero roots; the
    // closed-form solver would otherwise inflate them by a cube/square root
    // of the noise.
    int nzero = 0;
    while (nzero < 3) {
        const int k = 4 - nzero;
        if (std::abs(coeff[k]) < 1e-16 * std::pow(big, k)) {
            ++nzero;
        } else {
            break;
        }
    }

    Complex solved[4];
    const int deg = 4 - nzero;
    switch (deg) {
        case 1:
            solved[0] = -coeff[1];
            break;
        case 2:
            solve_quadratic(Complex(coeff[1]), Complex(coeff[2]), solved);
            break;
        case 3:
            solve_cubic(Complex(coeff[1]), Complex(coeff[2]), Complex(coeff[3]), solved);
            break;
        default:
            solve_quartic(coeff[1], coeff[2], coeff[3], coeff[4], solved);
            break;
    }

    const auto poly = [&](Complex x) {
        return (((x + coeff[1]) * x + coeff[2]) * x + coeff[3]) * x + coeff[4];
    };
    const auto dpoly = [&](Complex x) {
        return ((4.0 * x + 3.0 * coeff[1]) * x + 2.0 * coeff[2]) * x + coeff[3];
    };
    const double eps_coeff = 1e-16 * big * big * big * big;
    const auto poly_noise = [&](Complex x) {
        const double ax = std::abs(x);
        return eps_coeff * (1.0 + ax + ax * ax + ax * ax * ax);
    };
    const auto polish = [&](Complex x) {
        const Complex fx = poly(x);
        const Complex dfx = dpoly(x);
        if (std::abs(dfx) > 0.0) {
            const Complex xn = x - fx / dfx;
            if (std::abs(poly(xn)) <= std::abs(fx)) return xn;
        }
        return x;
    };

    std::sort(solved, solved + deg,
              [](const Complex& lhs, const Complex& rhs) { return lhs.real() < rhs.real(); });

    // Chain roots into candidate clusters; a cluster whose centroid is a root
    // of the polynomial to within coefficient noise is a numerically multiple
    // root and is replaced by its centroid (polishing individual members
    // would destroy the symmetric splitting). Well-separated roots get one
    // guarded Newton pass.
    Complex final_roots[4];
    int nfinal = 0;
    for (int k = 0; k < nzero; ++k) final_roots[nfinal++] = Complex(0.0);

    const auto emit_group = [&](auto&& self, const Complex* grp, int len) -> void {
        if (len == 1) {
            final_roots[nfinal++] = polish(grp[0]);
            return;
        }
        Complex centroid(0.0);
        for (int k = 0; k < len; ++k) centroid += grp[k];
        centroid /= static_cast<double>(len);
        if (std::abs(poly(centroid)) <= 100.0 * poly_noise(centroid)) {
            for (int k = 0; k < len; ++k) final_roots[nfinal++] = centroid;
            return;
        }
        int split = 1;
        double widest = 0.0;
        for (int k = 0; k + 1 < len; ++k) {
            const double gap = std::abs(grp[k + 1] - grp[k]);
            if (gap > widest) {
                widest = gap;
                split = k + 1;
            }
        }
        self(self, grp, split);
        self(self, grp + split, len - split);
    };

    const double chain_tol = 1e-4 * big;
    int i = 0;
    while (i < deg) {
        int j = i + 1;
        while (j < deg && std::abs(solved[j] - solved[j - 1]) < chain_tol) ++j;
        emit_group(emit_group, solved + i, j - i);
        i = j;
    }

    // A trailing coefficient at noise level certifies a zero root; negative or
    // complex leftovers of that magnitude are the same noise and snap to zero.
    const bool noise_zero_ok = std::abs(coeff[4]) <= 1e-13 * big * big * big * big;
    std::array<double, 4> lam{};
    for (int k = 0; k < 4; ++k) {
        const Complex z = final_roots[k];
        const bool bad = std::abs(z.imag()) > kEigenErrorTol * big || z.real() < -kEigenErrorTol * big;
        if (bad) {
            if (noise_zero_ok && std::abs(z) <= 1e-4 * big) {
                lam[k] = 0.0;
                continue;
            }
            throw std::runtime_error("real_eigenvalues4: eigenvalue with imaginary or negative "
                                     "part beyond tolerance (invalid input matrix)");
        }
        double v = z.real();
        if (std::abs(v) < kEigenClampTol) v = 0.0;
        lam[k] = std::max(v, 0.0);
    }
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return lam;
}

}  // namespace detail

DensityMatrix2 DensityMatrix2::density(const std::array<Complex, 4>& entries) {
    DensityMatrix2 rho{entries};
    if (std::abs(rho.at(0, 1) - std::conj(rho.at(1, 0))) > kHermitianTol ||
        std::abs(rho.at(0, 0).imag()) > kHermitianTol ||
        std::abs(rho.at(1, 1).imag()) > kHermitianTol) {
        throw std::invalid_argument("DensityMatrix2: not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > kTraceTol) {
        throw std::invalid_argument("DensityMatrix2: trace must be 1");
    }
    // 2x2 eigenvalues directly.
    const double a = rho.at(0, 0).real();
    const double d = rho.at(1, 1).real();
    const double off = std::abs(rho.at(0, 1));
    const double disc = std::sqrt(0.25 * (a - d) * (a - d) + off * off);
    if (0.5 * (a + d) - disc < -kPsdTol) {
        throw std::invalid_argument("DensityMatrix2: negative eigenvalue");
    }
    return rho;
}

DensityMatrix4 DensityMatrix4::density(const std::array<Complex, 16>& entries) {
    DensityMatrix4 rho{entries};
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            if (std::abs(rho.at(i, j) - std::conj(rho.at(j, i))) > kHermitianTol) {
                throw std::invalid_argument("DensityMatrix4: not Hermitian");
            }
        }
    }
    if (std::abs(rho.trace() - 1.0) > kTraceTol) {
        throw std::invalid_argument("DensityMatrix4: trace must be 1");
    }
    // A Hermitian matrix has real eigenvalues, so a solver failure here means
    // the spectrum is genuinely outside the density-matrix cone.
    std::array<double, 4> lam;
    try {
        lam = detail::real_eigenvalues4(entries);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("DensityMatrix4: negative eigenvalue");
    }
    if (lam.back() < -kPsdTol) {
        throw std::invalid_argument("DensityMatrix4: negative eigenvalue");
    }
    return rho;
}

DensityMatrix4 DensityMatrix4::projector(const PureTwoQubitState& s) {
    s.validate();
    const Complex v[4] = {s.ee, s.eg, s.ge, s.gg};
    DensityMatrix4 rho;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) rho.at(i, j) = v[i] * std::conj(v[j]);
    }
    return rho;
}

DensityMatrix2 qubit_reduced_density(const SystemParams& params, const QubitInit& init,
                                     double t) {
    init.validate();
    const Complex c = init.excited_amp() * survival_amplitude(params, t);
    const Complex d = init.ground_amp();
    DensityMatrix2 rho;
    rho.at(0, 0) = std::norm(c);
    rho.at(0, 1) = c * std::conj(d);
    rho.at(1, 0) = std::conj(rho.at(0, 1));
    rho.at(1, 1) = 1.0 - std::norm(c);
    return rho;
}

double linear_entropy(const DensityMatrix2& rho) {
    if (std::abs(rho.trace() - 1.0) > 1e-10 ||
        std::abs(rho.at(0, 1) - std::conj(rho.at(1, 0))) > 1e-10) {
        throw std::invalid_argument("linear_entropy: invalid density matrix");
    }
    const double purity = std::norm(rho.at(0, 0)) + std::norm(rho.at(1, 1)) +
                          2.0 * std::norm(rho.at(0, 1));
    return 1.0 - purity;
}

double concurrence_pure(const PureTwoQubitState& s) {
    s.validate();
    return 2.0 * std::abs(s.ee * s.gg - s.eg * s.ge);
}

double concurrence_wootters(const DensityMatrix4& rho) {
    const auto flipped = detail::spin_flipped(rho.m);
    std::array<Complex, 16> product{};
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            const Complex aik = rho.m[4 * i + k];
            for (int j = 0; j < 4; ++j) product[4 * i + j] += aik * flipped[4 * k + j];
        }
    }
    const auto lam = detail::real_eigenvalues4(product);
    const double c = std::sqrt(lam[0]) - std::sqrt(lam[1]) - std::sqrt(lam[2]) - std::sqrt(lam[3]);
    return std::max(0.0, c);
}

}  // namespace swapsim
