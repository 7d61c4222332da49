// Copyright 2026 the gl2spec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gl2spec/domains.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gl2spec {

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool in_range(double v, double lo, double hi, double tol) {
    return v >= lo - tol && v <= hi + tol;
}

}  // namespace

bool domain_contains(SubgroupName group, std::complex<double> x, std::complex<double> y,
                     double tol) {
    switch (group) {
        case SubgroupName::Z0:
            return near(std::abs(x), 1.0, tol) && near(std::abs(y), 1.0, tol);
        case SubgroupName::Z2_2:
            return near(std::abs(x), 1.0, tol) && near(y.imag(), 0.0, tol) &&
                   in_range(y.real(), -2.0, 2.0, tol);
        case SubgroupName::Z2_3: {
            // x = a + b, y = ab with |a| = |b| = 1 forces conj(x) y = x.
            if (!near(std::abs(y), 1.0, tol)) return false;
            if (std::abs(x) > 2.0 + tol) return false;
            return std::abs(std::conj(x) * y - x) <= 4.0 * tol;
        }
        case SubgroupName::D4_1:
            return near(x.imag(), 0.0, tol) && near(y.imag(), 0.0, tol) &&
                   in_range(x.real(), -2.0, 2.0, tol) && in_range(y.real(), -2.0, 2.0, tol);
        case SubgroupName::D4_2: {
            if (!near(x.imag(), 0.0, tol) || !near(y.imag(), 0.0, tol)) return false;
            double xr = x.real(), yr = y.real();
            return in_range(yr, -1.0, 3.0, tol) && yr >= xr * xr / 4.0 - 1.0 - tol;
        }
        case SubgroupName::D6_1: {
            if (!near(x.imag(), 0.0, tol)) return false;
            double xr = x.real();
            if (!in_range(xr, -1.0, 8.0, tol)) return false;
            // The defining cubic is steep; admit a generous band scaled to
            // the local magnitude so forward images always pass.
            double scale = 1.0 + std::abs(xr) * std::abs(xr) * std::abs(xr) +
                           std::norm(y) + std::abs(y.real());
            return std::abs(d61::surface_residual(xr, y.real(), y.imag())) <=
                   1e5 * tol * scale;
        }
        default:
            throw std::invalid_argument("no joint-spectrum description for this subgroup");
    }
}

namespace d61 {

double surface_residual(double x, double y1, double y2) {
    return y2 * y2 - (x * x * x - y1 * y1 - 4.0 * x * y1 - x * x - 2.0 * y1 - x);
}

std::array<double, 3> surface_cubic_coeffs(double y1, double y2) {
    return {-1.0, -(4.0 * y1 + 1.0), -(y1 * y1 + 2.0 * y1 + y2 * y2)};
}

std::array<std::complex<double>, 3> cubic_roots(double y1, double y2) {
    using C = std::complex<double>;
    const double s = 11.0 + 90.0 * y1 + 27.0 * y1 * y1 + 27.0 * y2 * y2;
    const double onep = 1.0 + 3.0 * y1;
    C disc = C(s * s - 256.0 * onep * onep * onep, 0.0);
    C root = std::sqrt(disc);
    C px = std::pow(-s + root, 1.0 / 3.0);
    if (std::abs(px) < 1e-14) {
        // Degenerate radicand; nudge off the branch point.
        px = std::pow(-s + root + C(1e-30, 1e-30), 1.0 / 3.0);
    }
    const double c23 = std::pow(2.0, 2.0 / 3.0);
    const double c13 = std::pow(2.0, 1.0 / 3.0);
    std::array<C, 3> out;
    for (int j = 0; j < 3; ++j) {
        C eps = std::polar(1.0, 2.0 * std::numbers::pi * j / 3.0);
        out[j] = (C(2.0, 0.0) - c23 * eps * px -
                  8.0 * c13 * std::conj(eps) * onep / px) /
                 6.0;
    }
    return out;
}

RealRoots real_cubic_roots(double y1, double y2) {
    // Near the singular point (x, y) = (-1, 1) two solutions collide; the
    // recentred cubic s^3 - 4 s^2 - 4 w1 s - (w1^2 + w2^2) in s = x + 1,
    // w = y - 1 splits exactly into the far root and a quadratic pair,
    // avoiding the double-root noise of the generic solver.
    if (std::abs(y1 - 1.0) < 0.15 && std::abs(y2) < 0.15) {
        RealRoots out;
        const long double w1 = static_cast<long double>(y1) - 1.0L;
        const long double w2 = y2;
        long double d = w1;  // far root offset: s3 = 4 + d
        for (int it = 0; it < 60; ++it) {
            long double g = d * d * d + 8.0L * d * d + (16.0L - 4.0L * w1) * d -
                            16.0L * w1 - (w1 * w1 + w2 * w2);
            long double gp = 3.0L * d * d + 16.0L * d + 16.0L - 4.0L * w1;
            long double step = g / gp;
            d -= step;
            if (std::abs(step) < 1e-22L) break;
        }
        out.x[out.count++] = static_cast<double>(3.0L + d);
        // (s - s3)(s^2 + d s + gamma) with gamma = (w1^2+w2^2)/s3
        long double gamma = (w1 * w1 + w2 * w2) / (4.0L + d);
        long double disc = d * d - 4.0L * gamma;
        if (disc >= 0.0L) {
            long double r = std::sqrt(disc);
            out.x[out.count++] = static_cast<double>((-d + r) * 0.5L - 1.0L);
            out.x[out.count++] = static_cast<double>((-d - r) * 0.5L - 1.0L);
        }
        return out;
    }
    // trigonometric / hyperbolic solution of the depressed cubic; much
    // cheaper and branch-stable compared to the complex closed form
    RealRoots out;
    auto coeffs = surface_cubic_coeffs(y1, y2);
    const double a = coeffs[0], b = coeffs[1], c = coeffs[2];
    const double p = b - a * a / 3.0;
    const double q = c + (2.0 * a * a * a - 9.0 * a * b) / 27.0;
    const double shift = -a / 3.0;
    auto push = [&](double u) {
        double x = u + shift;
        // one Newton step against the original cubic
        double f = ((x + a) * x + b) * x + c;
        double fp = (3.0 * x + 2.0 * a) * x + b;
        if (std::abs(fp) > 1e-12) x -= f / fp;
        out.x[out.count++] = x;
    };
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    if (disc > 0.0) {
        // three real roots (p < 0 here)
        double r = 2.0 * std::sqrt(-p / 3.0);
        double arg = std::clamp(3.0 * q / (p * r), -1.0, 1.0);
        double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) {
            push(r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0));
        }
    } else if (p < 0.0) {
        double r = 2.0 * std::sqrt(-p / 3.0);
        double t = -3.0 * std::abs(q) / (p * r);
        push(-std::copysign(r, q) * std::cosh(std::acosh(std::max(1.0, t)) / 3.0));
    } else if (p > 0.0) {
        double r = 2.0 * std::sqrt(p / 3.0);
        push(-r * std::sinh(std::asinh(3.0 * q / (p * r)) / 3.0));
    } else {
        push(std::cbrt(-q));
    }
    return out;
}

Region classify_y(double y1, double y2, double tol) {
    if (y1 < -2.0 - tol || y1 > 10.0 + tol) return Region::Outside;
    double half = y_halfwidth(y1);
    if (std::abs(y2) > half + tol) return Region::Outside;
    if (std::abs(std::abs(y2) - half) <= tol) return Region::Boundary;

    if (y1 < -1.0 / 3.0 - tol) return Region::A;
    double t = 27.0 * y2 * y2;
    double base = -11.0 - 90.0 * y1 - 27.0 * y1 * y1;
    double cube = 16.0 * std::sqrt(std::max(0.0, 1.0 + 3.0 * y1)) *
                  std::max(0.0, 1.0 + 3.0 * y1);
    double upper = base + cube;  // discriminant-zero curve separating D' from B
    double lower = base - cube;  // separating A from D' (only above y1 = -1/3)

    if (y1 > 1.0 + tol) return Region::B;
    if (std::abs(t - upper) <= 27.0 * tol || std::abs(t - lower) <= 27.0 * tol)
        return Region::Boundary;
    if (t > upper) return Region::B;
    if (y1 < -5.0 / 27.0 && t < lower) return Region::A;
    return Region::Dprime;
}

double y_halfwidth(double y1) {
    if (y1 < -2.0 || y1 > 10.0) return 0.0;
    double xb = 2.0 * (-1.0 + std::sqrt(5.0 + 2.0 * y1));
    double q = xb * (8.0 - xb) * (8.0 - xb) * (8.0 - xb);
    return std::sqrt(std::max(0.0, q)) / 8.0;
}

double x_slice_lower(double x) {
    if (x <= 0.0) {
        double c = std::sqrt(std::max(0.0, x + 1.0));
        return -2.0 * x - 1.0 - c * c * c;
    }
    return (x * x + 4.0 * x - 16.0) / 8.0;
}

double x_slice_upper(double x) {
    double c = std::sqrt(std::max(0.0, x + 1.0));
    return -2.0 * x - 1.0 + c * c * c;
}

std::array<double, 3> boundary_p_roots(double y) {
    using C = std::complex<double>;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::array<double, 3> out{nan, nan, nan};
    C disc = C(27.0 * (27.0 * y * y - 22.0 * y - 5.0), 0.0);
    C root = std::sqrt(disc);
    C p_big = std::pow(C(27.0 * y - 11.0, 0.0) + root, 1.0 / 3.0);
    if (std::abs(p_big) < 1e-14) return out;
    const double c13 = std::pow(2.0, -1.0 / 3.0);
    for (int j = 0; j < 3; ++j) {
        C eps = std::polar(1.0, 2.0 * std::numbers::pi * j / 3.0);
        C pj = (C(-1.0, 0.0) + c13 * eps * p_big + c13 * 4.0 * std::conj(eps) / p_big) / 6.0;
        if (std::abs(pj.imag()) > 1e-8 * (1.0 + std::abs(pj))) continue;
        double p = pj.real();
        double x = 4.0 * p + 4.0 * p * p;
        if (x < -1.0 - 1e-9) continue;
        double root32 = std::sqrt(std::max(0.0, x + 1.0));
        double cube = root32 * root32 * root32;
        double res = std::min(std::abs(y - (-2.0 * x - 1.0 - cube)),
                              std::abs(y - (-2.0 * x - 1.0 + cube)));
        if (res <= 1e-7 * (1.0 + std::abs(y))) out[j] = p;
    }
    return out;
}

}  // namespace d61

namespace d42 {
double c1_c2_y_of_x(double x) { return x * x / 4.0 - 1.0; }
double c3_y() { return 3.0; }
double c1_x_of_y(double y) { return -2.0 * std::sqrt(std::max(0.0, y + 1.0)); }
double c2_x_of_y(double y) { return 2.0 * std::sqrt(std::max(0.0, y + 1.0)); }
}  // namespace d42

}  // namespace gl2spec
