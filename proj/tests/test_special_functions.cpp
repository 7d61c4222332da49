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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gl2spec/elliptic.hpp"
#include "gl2spec/quadrature.hpp"
#include "gl2spec/sequences.hpp"

using namespace gl2spec;
namespace {
constexpr double kPi = std::numbers::pi;

// brute-force walk counter for small n (independent of the DP)
BigInt walks_brute(int steps, int i, int j) {
    if (steps == 0) return (i == 0 && j == 0) ? 1 : 0;
    BigInt total = 0;
    for (int di : {-1, 1}) {
        for (int dj : {-1, 1}) {
            if (i + di < 0 || j + dj < 0) continue;
            total += walks_brute(steps - 1, i + di, j + dj);
        }
    }
    return total;
}
}  // namespace

TEST_CASE("complete elliptic integrals") {
    CHECK(complete_K(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(complete_E(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(complete_E(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(complete_K(1.0), std::domain_error);
    CHECK_THROWS_AS(complete_E(1.5), std::domain_error);

    // quadrature oracle at m = 1/2 and a negative parameter
    for (double m : {0.5, -2.0, 0.9, -0.3}) {
        auto k_ref = tanh_sinh(
            [m](double t) { return 1.0 / std::sqrt(1.0 - m * std::sin(t) * std::sin(t)); },
            0.0, kPi / 2, 1e-14);
        auto e_ref = tanh_sinh(
            [m](double t) { return std::sqrt(1.0 - m * std::sin(t) * std::sin(t)); }, 0.0,
            kPi / 2, 1e-14);
        CHECK(complete_K(m) == doctest::Approx(k_ref.value).epsilon(1e-12));
        CHECK(complete_E(m) == doctest::Approx(e_ref.value).epsilon(1e-12));
    }
}

TEST_CASE("Legendre relation") {
    for (double m = 0.1; m < 0.95; m += 0.1) {
        double lhs = complete_E(m) * complete_K(1 - m) + complete_E(1 - m) * complete_K(m) -
                     complete_K(m) * complete_K(1 - m);
        CHECK(lhs == doctest::Approx(kPi / 2).epsilon(1e-11));
    }
}

TEST_CASE("incomplete elliptic integrals") {
    CHECK(incomplete_F(kPi / 2, 0.3) == doctest::Approx(complete_K(0.3)).epsilon(1e-12));
    CHECK(incomplete_E(kPi / 2, 0.3) == doctest::Approx(complete_E(0.3)).epsilon(1e-12));
    CHECK(incomplete_E(0.0, 0.7) == 0.0);
    CHECK(incomplete_F(0.0, 0.7) == 0.0);

    for (auto [phi, m] : {std::pair{0.7, 0.4}, std::pair{1.2, -1.5}, std::pair{0.3, 0.95}}) {
        auto f_ref = tanh_sinh(
            [m](double t) { return 1.0 / std::sqrt(1.0 - m * std::sin(t) * std::sin(t)); },
            0.0, phi, 1e-14);
        auto e_ref = tanh_sinh(
            [m](double t) { return std::sqrt(1.0 - m * std::sin(t) * std::sin(t)); }, 0.0, phi,
            1e-14);
        CHECK(incomplete_F(phi, m) == doctest::Approx(f_ref.value).epsilon(1e-12));
        CHECK(incomplete_E(phi, m) == doctest::Approx(e_ref.value).epsilon(1e-12));
    }

    // integrand turns singular inside the range
    CHECK_THROWS_AS(incomplete_F(1.5, 1.2), std::domain_error);
}

TEST_CASE("catalan-family sequences") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(10) == 16796);
    CHECK(central_binomial(2) == 6);
    CHECK(central_binomial(0) == 1);
    CHECK(squared_catalan(4) == 196);
    CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("quadrant walk counts") {
    CHECK(count_walks_quadrant(0) == 1);
    CHECK(count_walks_quadrant(1) == 1);
    CHECK(count_walks_quadrant(2) == 4);
    for (int n = 0; n <= 4; ++n) {
        CHECK(count_walks_quadrant(n) == walks_brute(2 * n, 0, 0));
    }
    for (int n = 0; n <= 12; ++n) {
        CHECK(count_walks_quadrant(n) == squared_catalan(n));
    }
}

TEST_CASE("multinomial identity") {
    for (int n : {0, 1, 4, 7, 12}) {
        auto [lhs, rhs] = multinomial_identity_sides(n);
        CHECK(lhs == rhs);
    }
    CHECK(multinomial_identity_sides(4).first == 196);
}

TEST_CASE("squared-Catalan generating function") {
    auto series = mz_series(5);
    CHECK(series == std::vector<BigInt>{1, 1, 4, 25, 196});
    CHECK(mz_ode_check(12) == 0);
    CHECK(mz_ode_check(32) == 0);

    for (double z : {0.001, 0.01, 0.05}) {
        double series_val = 0.0, zn = 1.0;
        for (int n = 0; n <= 40; ++n) {
            series_val += squared_catalan(n).get_d() * zn;
            zn *= z;
        }
        CHECK(mz_closed_form(z) == doctest::Approx(series_val).epsilon(1e-10));
    }
    // series fallback region
    CHECK(mz_closed_form(5e-5) == doctest::Approx(1.0 + 5e-5).epsilon(1e-7));
    CHECK_THROWS_AS(mz_closed_form(0.2), std::domain_error);
    CHECK_THROWS_AS(mz_closed_form(-0.01), std::domain_error);
}

TEST_CASE("squared-Catalan recurrence") {
    for (int n = 0; n <= 30; ++n) {
        BigInt lhs = BigInt(n + 2) * (n + 2) * squared_catalan(n + 1);
        BigInt rhs = BigInt(4) * (2 * n + 1) * (2 * n + 1) * squared_catalan(n);
        CHECK(lhs == rhs);
    }
}
