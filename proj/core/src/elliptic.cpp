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

#include "gl2spec/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gl2spec {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kMaxIter = 64;
}  // namespace

// Arithmetic-geometric mean loop.  Also accumulates the sum
// S = sum_{n>=0} 2^{n-1} c_n^2 needed for E(m) = K(m) (1 - S), where
// c_0^2 = m and c_{n+1} = (a_n - g_n)/2.
static void agm(double m, double& agm_limit, double& c_sum) {
    double a = 1.0;
    double g = std::sqrt(1.0 - m);
    double sum = 0.5 * m;  // n = 0 term
    double c_pow = 1.0;    // 2^{n-1} for n = 1
    for (int i = 0; i < kMaxIter; ++i) {
        double c = 0.5 * (a - g);  // c_{i+1}
        sum += c_pow * c * c;
        c_pow *= 2.0;
        double an = 0.5 * (a + g);
        double gn = std::sqrt(a * g);
        a = an;
        g = gn;
        if (std::abs(a - g) < 1e-17 * std::abs(a)) break;
    }
    agm_limit = a;
    c_sum = sum;
}

double complete_K(double m) {
    if (m >= 1.0) throw std::domain_error("complete_K requires m < 1");
    if (m == 0.0) return kPi / 2.0;
    if (m < 0.0) {
        // imaginary-modulus transformation: K(m) = K(m/(m-1)) / sqrt(1-m)
        return complete_K(m / (m - 1.0)) / std::sqrt(1.0 - m);
    }
    double a, s;
    agm(m, a, s);
    return kPi / (2.0 * a);
}

double complete_E(double m) {
    if (m > 1.0) throw std::domain_error("complete_E requires m <= 1");
    if (m == 0.0) return kPi / 2.0;
    if (m == 1.0) return 1.0;
    if (m < 0.0) {
        // E(m) = sqrt(1-m) E(m/(m-1))
        return std::sqrt(1.0 - m) * complete_E(m / (m - 1.0));
    }
    double a, s;
    agm(m, a, s);
    return (1.0 - s) * kPi / (2.0 * a);
}

// Carlson symmetric forms by duplication.
double carlson_RF(double x, double y, double z) {
    if (x < 0 || y < 0 || z < 0 || x + y <= 0 || y + z <= 0 || z + x <= 0) {
        throw std::domain_error("carlson_RF arguments out of range");
    }
    for (int i = 0; i < kMaxIter; ++i) {
        double u = (x + y + z) / 3.0;
        double dx = (u - x) / u, dy = (u - y) / u, dz = (u - z) / u;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < 1e-10) {
            double e2 = dx * dy + dy * dz + dz * dx;
            double e3 = dx * dy * dz;
            return (1.0 + (e2 * e2 / 24.0 - e3 / 14.0 - e2 / 10.0) +
                    e3 / 6.0) /
                   std::sqrt(u);
        }
        double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        double lambda = sx * sy + sy * sz + sz * sx;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
    }
    throw std::runtime_error("carlson_RF did not converge");
}

double carlson_RD(double x, double y, double z) {
    if (x < 0 || y < 0 || x + y <= 0 || z <= 0) {
        throw std::domain_error("carlson_RD arguments out of range");
    }
    double sum = 0.0;
    double factor = 1.0;
    for (int i = 0; i < kMaxIter; ++i) {
        double u = (x + y + 3.0 * z) / 5.0;
        double dx = (u - x) / u, dy = (u - y) / u, dz = (u - z) / u;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < 1e-10) {
            double ea = dx * dy;
            double eb = dz * dz;
            double ec = ea - eb;
            double ed = ea - 6.0 * eb;
            double ee = ed + 2.0 * ec;
            double s = 1.0 + ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 4.5 / 26.0 * dz * ee) +
                       dz * (ee / 6.0 + dz * (-9.0 / 22.0 * ec + 3.0 / 26.0 * dz * ea));
            return factor * s / (u * std::sqrt(u)) + sum;
        }
        double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        double lambda = sx * sy + sy * sz + sz * sx;
        sum += factor * 3.0 / (sz * (z + lambda));
        factor *= 0.25;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
    }
    throw std::runtime_error("carlson_RD did not converge");
}

double incomplete_F(double phi, double m) {
    if (phi < 0.0 || phi > kPi / 2.0 + 1e-12) {
        throw std::domain_error("incomplete_F supports 0 <= phi <= pi/2");
    }
    double s = std::sin(phi), c = std::cos(phi);
    double w = 1.0 - m * s * s;
    if (w < -1e-14) throw std::domain_error("incomplete_F integrand is singular on [0, phi]");
    if (w < 0) w = 0;
    if (s == 0.0) return 0.0;
    return s * carlson_RF(c * c, w, 1.0);
}

double incomplete_E(double phi, double m) {
    if (phi < 0.0 || phi > kPi / 2.0 + 1e-12) {
        throw std::domain_error("incomplete_E supports 0 <= phi <= pi/2");
    }
    double s = std::sin(phi), c = std::cos(phi);
    double w = 1.0 - m * s * s;
    if (w < -1e-14) throw std::domain_error("incomplete_E integrand is singular on [0, phi]");
    if (w < 0) w = 0;
    if (s == 0.0) return 0.0;
    return s * carlson_RF(c * c, w, 1.0) - m * s * s * s * carlson_RD(c * c, w, 1.0) / 3.0;
}

}  // namespace gl2spec
