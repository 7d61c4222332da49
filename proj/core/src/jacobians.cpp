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

#include "gl2spec/jacobians.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "gl2spec/domains.hpp"

namespace gl2spec {

namespace {

constexpr double kPi = std::numbers::pi;
const double kFourPiSq = 4.0 * kPi * kPi;

// d/dtheta_j divided by 2 pi i: a monomial picks up its j-th exponent.
LaurentPoly theta_derivative(const LaurentPoly& p, int j) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) {
        long k = (j == 1) ? e.e1 : e.e2;
        if (k != 0) out.add_term(e, c * k);
    }
    return out;
}

// Integer part of the determinant det d(p,q)/d(theta): the full Jacobian is
// (2 pi i)^2 = -4 pi^2 times the evaluation of this polynomial.
LaurentPoly det_poly(const LaurentPoly& p, const LaurentPoly& q) {
    return theta_derivative(p, 1) * theta_derivative(q, 2) -
           theta_derivative(p, 2) * theta_derivative(q, 1);
}

struct GroupJacobian {
    LaurentPoly chi1, chi2;
    LaurentPoly det;  // det_poly(chi1, chi2)
};

const GroupJacobian& group_jacobian(SubgroupName group) {
    static std::map<SubgroupName, GroupJacobian> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto it = cache.find(group);
    if (it == cache.end()) {
        GeneratorTable gens = fundamental_generators(group);
        GroupJacobian gj;
        gj.chi1 = character(group, gens.rho1).poly;
        gj.chi2 = character(group, gens.rho2).poly;
        gj.det = det_poly(gj.chi1, gj.chi2);
        it = cache.emplace(group, std::move(gj)).first;
    }
    return it->second;
}

Complex eval_det(const LaurentPoly& det, TorusPoint t) {
    auto v = det.evaluate_ld(t);
    const long double f = -4.0L * 3.14159265358979323846264338328L * 3.14159265358979323846264338328L;
    return {static_cast<double>(f * v.real()), static_cast<double>(f * v.imag())};
}

}  // namespace

std::pair<Complex, Complex> invariant_coords(SubgroupName group, TorusPoint t) {
    const auto& gj = group_jacobian(group);
    return {gj.chi1.evaluate(t), gj.chi2.evaluate(t)};
}

Complex jacobian_theta(SubgroupName group, TorusPoint t) {
    return eval_det(group_jacobian(group).det, t);
}

Complex jacobian_sq_invariant(SubgroupName group, Complex x, Complex y) {
    const double c = 16.0 * kPi * kPi * kPi * kPi;
    switch (group) {
        case SubgroupName::Z0:
            return c * x * x * y * y;
        case SubgroupName::Z2_2:
            return -c * x * x * (4.0 - y * y);
        case SubgroupName::Z2_3:
            return c * y * y * (x * x - 4.0 * y);
        case SubgroupName::D4_1:
            return c * (4.0 - x * x) * (4.0 - y * y);
        case SubgroupName::D4_2:
            return c * (y + 1.0) * (3.0 - y) * (4.0 * y - x * x + 4.0);
        case SubgroupName::D6_1: {
            // Evaluate in extended precision: the cubic cancels heavily near
            // the boundary curves.
            using CL = std::complex<long double>;
            CL xl(x.real(), x.imag()), yl(y.real(), y.imag());
            CL q = 16.0L + 24.0L * xl - 13.0L * xl * xl + 2.0L * xl * xl * xl + 16.0L * yl -
                   4.0L * xl * yl - xl * xl * yl + 4.0L * yl * yl;
            CL v = CL(-static_cast<long double>(c), 0.0L) * (yl + 2.0L * xl + 1.0L) * q;
            return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
        }
        default:
            throw std::invalid_argument("no Jacobian for this subgroup");
    }
}

Complex jacobian_xy(SubgroupName group, Complex x, Complex y) {
    if (!domain_contains(group, x, y, 1e-9)) {
        throw std::domain_error("(x, y) is outside the joint spectrum of " +
                                std::string(subgroup_name_string(group)));
    }
    switch (group) {
        case SubgroupName::Z0:
            return kFourPiSq * x * y;
        case SubgroupName::Z2_2:
            return kFourPiSq * Complex(0.0, 1.0) * x *
                   std::sqrt(std::max(0.0, 4.0 - y.real() * y.real()));
        case SubgroupName::Z2_3:
            return kFourPiSq * y * std::sqrt(x * x - 4.0 * y);
        case SubgroupName::D4_1: {
            double v = (4.0 - x.real() * x.real()) * (4.0 - y.real() * y.real());
            return kFourPiSq * std::sqrt(std::max(0.0, v));
        }
        case SubgroupName::D4_2: {
            double v = (y.real() + 1.0) * (3.0 - y.real()) *
                       (4.0 * y.real() - x.real() * x.real() + 4.0);
            return kFourPiSq * std::sqrt(std::max(0.0, v));
        }
        case SubgroupName::D6_1: {
            Complex prod = jacobian_sq_invariant(group, x, y) / Complex(-16.0 * kPi * kPi * kPi * kPi);
            return kFourPiSq * Complex(0.0, 1.0) * std::sqrt(prod);
        }
        default:
            throw std::invalid_argument("no Jacobian for this subgroup");
    }
}

double conjecture_identity_residual(SubgroupName group, TorusPoint t) {
    GeneratorTable gens = fundamental_generators(group);
    LaurentPoly srho = s_function(group, gens.varrho).poly;
    if (group == SubgroupName::Z0) srho = LaurentPoly::one();
    const long double four_pi_sq = 4.0L * 3.14159265358979323846264338328L * 3.14159265358979323846264338328L;
    long double lhs = four_pi_sq * std::abs(srho.evaluate_ld(t));
    long double j = four_pi_sq * std::abs(group_jacobian(group).det.evaluate_ld(t));
    long double w = gens.a_const;
    if (gens.so4_weight) {
        auto y = group_jacobian(group).chi2.evaluate_ld(t);
        w = 1.0L / std::abs(1.0L + y.real());
    }
    return static_cast<double>(std::abs(lhs - w * j));
}

namespace {

// D12 Jacobian from the G2-style variables x' = x - 1, y' = 2 Re(y) - x + 2
// built on the PSU(3) generators.
const LaurentPoly& d12_det_poly() {
    static LaurentPoly det = [] {
        const auto& gj = group_jacobian(SubgroupName::D6_1);
        LaurentPoly xp = gj.chi1 - LaurentPoly::one();
        LaurentPoly yp = gj.chi2 + gj.chi2.conjugate() - gj.chi1 +
                         LaurentPoly::monomial({0, 0}, 2);
        return det_poly(xp, yp);
    }();
    return det;
}

}  // namespace

double RelationResiduals::max_residual() const {
    return std::max({d4_1_from_z2_2, d12_from_d6_1, z2_3_boundary_poly});
}

RelationResiduals relation_residuals(TorusPoint t) {
    RelationResiduals out;

    {
        Complex j41 = jacobian_theta(SubgroupName::D4_1, t);
        Complex j22 = jacobian_theta(SubgroupName::Z2_2, t);
        out.d4_1_from_z2_2 =
            std::abs(j41 - 2.0 * j22.real()) / std::max(1.0, std::abs(j41));
    }
    {
        Complex j12 = eval_det(d12_det_poly(), t);
        Complex j61 = jacobian_theta(SubgroupName::D6_1, t);
        out.d12_from_d6_1 =
            std::abs(j12 - 2.0 * j61.real()) / std::max(1.0, std::abs(j12));
    }
    {
        // The boundary surface of the SO(4) picture of the U(2) Jacobian:
        // (2 Re J_{Z2_3})^2 = 16 pi^4 (x2^2 y2^2 - 4 x2^2 y2 + 4 x2^2
        //                     - 4 y2^3 + 12 y2^2 - 4 z2 - 8)
        // with z2 = w1 w2^-1 + w1^-1 w2 the third invariant.
        Complex j23 = jacobian_theta(SubgroupName::Z2_3, t);
        auto [x2c, y2c] = invariant_coords(SubgroupName::D4_2, t);
        double x2 = x2c.real(), y2 = y2c.real();
        double z2 = 2.0 * std::cos(2.0 * kPi * (t.theta1 - t.theta2));
        double poly = x2 * x2 * y2 * y2 - 4.0 * x2 * x2 * y2 + 4.0 * x2 * x2 -
                      4.0 * y2 * y2 * y2 + 12.0 * y2 * y2 - 4.0 * z2 - 8.0;
        double lhs = 4.0 * j23.real() * j23.real();
        double rhs = 16.0 * kPi * kPi * kPi * kPi * poly;
        out.z2_3_boundary_poly = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    }
    return out;
}

Complex d61_jacobian_x_rey_theta(TorusPoint t) {
    static const LaurentPoly det2 = [] {
        const auto& gj = group_jacobian(SubgroupName::D6_1);
        // 2 Re(y) = y + conj(y); halve after evaluation.
        return det_poly(gj.chi1, gj.chi2 + gj.chi2.conjugate());
    }();
    return -kFourPiSq * 0.5 * det2.evaluate(t);
}

double d61_jacobian_x_rey(double x, double y1) {
    long double f1, f2;
    if (x > 7.0 && y1 > 8.0) {
        // recentred at the tip (8, 10): both factors vanish there and the
        // direct sums cancel catastrophically
        long double u = static_cast<long double>(x) - 8.0L;
        long double v = static_cast<long double>(y1) - 10.0L;
        f1 = u * u + 20.0L * u - 8.0L * v;
        f2 = -u * u * u - 23.0L * u * u - 135.0L * u + v * v + 54.0L * v + 4.0L * u * v;
    } else if (x < 0.0 && std::abs(y1 - 1.0) < 0.5) {
        // recentred at the singular point (-1, 1)
        long double s = static_cast<long double>(x) + 1.0L;
        long double w = static_cast<long double>(y1) - 1.0L;
        f1 = s * s + 2.0L * s - 27.0L - 8.0L * w;
        f2 = -s * s * s + 4.0L * s * s + 4.0L * s * w + w * w;
    } else {
        long double xl = x, yl = y1;
        f1 = xl * xl + 4.0L * xl - 16.0L - 8.0L * yl;
        f2 = yl * yl - xl * xl * xl + xl * xl + xl + 2.0L * yl + 4.0L * xl * yl;
    }
    long double p = f1 * f2;
    return kFourPiSq * static_cast<double>(std::sqrt(std::max(0.0L, p)));
}

Complex d61_jacobian_y_theta(TorusPoint t) {
    const auto& gj = group_jacobian(SubgroupName::D6_1);
    static const std::pair<LaurentPoly, LaurentPoly> dy = [&] {
        return std::pair{theta_derivative(gj.chi2, 1), theta_derivative(gj.chi2, 2)};
    }();
    // y1 = Re y, y2 = Im y: det d(y1,y2)/d(theta) = Im(conj(dy/dt1) dy/dt2).
    Complex a = 2.0 * kPi * Complex(0, 1) * dy.first.evaluate(t);
    Complex b = 2.0 * kPi * Complex(0, 1) * dy.second.evaluate(t);
    return Complex(std::imag(std::conj(a) * b), 0.0);
}

namespace {

// Monomials of the boundary quartic b(x, y1, y2) with J_y^2 = 4 pi^4 b.
struct BTerm {
    int i, j, k;  // x^i y1^j y2^k
    double c;
};
constexpr BTerm kBTerms[] = {
    {0, 0, 0, 16},  {1, 0, 0, -9},   {2, 0, 0, 34},  {0, 1, 0, -2},  {1, 1, 0, 178},
    {2, 1, 0, 24},  {0, 2, 0, 39},   {1, 2, 0, -97}, {2, 2, 0, -10}, {0, 3, 0, 4},
    {1, 3, 0, 24},  {0, 4, 0, -9},   {0, 0, 2, -69}, {1, 0, 2, 143}, {2, 0, 2, -42},
    {0, 1, 2, -124},{1, 1, 2, 24},   {0, 2, 2, -18}, {0, 0, 4, -9}};

// The same polynomial recentred at (x0, y0); the direct sum cancels badly
// near the spectrum tip (8, 10) and the singular point (-1, 1).  The shift
// is exact integer arithmetic.
std::vector<BTerm> shifted_b_terms(long long x0, long long y0) {
    std::map<std::array<int, 3>, long long> acc;
    auto binom = [](int n, int r) {
        long long v = 1;
        for (int t = 1; t <= r; ++t) v = v * (n - r + t) / t;
        return v;
    };
    auto ipow = [](long long base, int e) {
        long long v = 1;
        for (int q = 0; q < e; ++q) v *= base;
        return v;
    };
    for (const auto& t : kBTerms) {
        for (int a = 0; a <= t.i; ++a) {
            for (int bb = 0; bb <= t.j; ++bb) {
                acc[{a, bb, t.k}] += static_cast<long long>(t.c) * binom(t.i, a) *
                                     ipow(x0, t.i - a) * binom(t.j, bb) * ipow(y0, t.j - bb);
            }
        }
    }
    std::vector<BTerm> out;
    for (const auto& [key, c] : acc) {
        if (c != 0) out.push_back({key[0], key[1], key[2], static_cast<double>(c)});
    }
    return out;
}

const std::vector<BTerm>& b_tip_terms() {
    static const std::vector<BTerm> terms = shifted_b_terms(8, 10);
    return terms;
}

const std::vector<BTerm>& b_apex_terms() {
    static const std::vector<BTerm> terms = shifted_b_terms(-1, 1);
    return terms;
}

}  // namespace

double d61_jacobian_y(double x, double y1, double y2) {
    // J^2 = 4 pi^4 b with the boundary quartic b; derived exactly by
    // reducing det d(Re y, Im y)/d(theta) squared against the invariants
    // x, y, conj(y), then modulo the surface cubic.
    long double b = 0.0L;
    if (x > 7.0 && y1 > 8.0) {
        // recentred evaluation near the tip
        long double u = static_cast<long double>(x) - 8.0L;
        long double v = static_cast<long double>(y1) - 10.0L;
        for (const auto& t : b_tip_terms()) {
            long double term = t.c;
            for (int q = 0; q < t.i; ++q) term *= u;
            for (int q = 0; q < t.j; ++q) term *= v;
            for (int q = 0; q < t.k; ++q) term *= y2;
            b += term;
        }
    } else if (std::abs(x + 1.0) < 0.5 && std::abs(y1 - 1.0) < 0.2 && std::abs(y2) < 0.2) {
        // recentred evaluation near the singular point
        long double u = static_cast<long double>(x) + 1.0L;
        long double v = static_cast<long double>(y1) - 1.0L;
        for (const auto& t : b_apex_terms()) {
            long double term = t.c;
            for (int q = 0; q < t.i; ++q) term *= u;
            for (int q = 0; q < t.j; ++q) term *= v;
            for (int q = 0; q < t.k; ++q) term *= y2;
            b += term;
        }
    } else {
        long double xl = x, u = y1, v = y2;
        for (const auto& t : kBTerms) {
            long double term = t.c;
            for (int q = 0; q < t.i; ++q) term *= xl;
            for (int q = 0; q < t.j; ++q) term *= u;
            for (int q = 0; q < t.k; ++q) term *= v;
            b += term;
        }
    }
    return 2.0 * kPi * kPi * static_cast<double>(std::sqrt(std::max(0.0L, b)));
}

}  // namespace gl2spec
