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

#include "gl2spec/orbit_functions.hpp"
#include "test_support.hpp"

using namespace gl2spec;
using gl2spec::testing::make_poly;

namespace {

// Random strictly dominant weight for the group.
Weight random_strict(testing::Rng& rng, SubgroupName name, int box = 9) {
    const auto& g = subgroup(name);
    for (;;) {
        Weight w{rng.uniform_int(-box, box), rng.uniform_int(-box, box)};
        if (name != SubgroupName::Z0) w = canonical_rep(g, w);
        if (is_strictly_dominant(g, w)) return w;
    }
}

long long dimension_at_identity(SubgroupName g, Weight w) {
    BigInt sum = 0;
    for (const auto& [e, c] : character(g, w).poly.terms()) sum += c;
    return sum.get_si();
}

}  // namespace

TEST_CASE("c_function examples") {
    auto f = c_function(SubgroupName::D4_1, {1, 0});
    CHECK(f.poly == make_poly({{{1, 0}, 2}, {{-1, 0}, 2}}));  // stabilizer doubles coefficients

    for (SubgroupName name : kMeasureGroups) {
        auto g = c_function(name, {0, 0});
        CHECK(g.poly == LaurentPoly::monomial({0, 0}, subgroup(name).order()));
    }

    auto h = c_function(SubgroupName::Z2_3, {1, 0});
    CHECK(h.poly == make_poly({{{1, 0}, 1}, {{0, 1}, 1}}));
}

TEST_CASE("s_function examples") {
    CHECK(s_function(SubgroupName::D4_1, {1, 0}).poly.is_zero());  // fixed by a reflection

    auto s11 = s_function(SubgroupName::D4_1, {1, 1}).poly;
    CHECK(s11 == make_poly({{{1, 1}, 1}, {{-1, -1}, 1}, {{1, -1}, -1}, {{-1, 1}, -1}}));

    auto s01 = s_function(SubgroupName::Z2_2, {0, 1}).poly;
    CHECK(s01 == make_poly({{{0, 1}, 1}, {{0, -1}, -1}}));
}

TEST_CASE("S vanishes exactly on reflection-stabilized weights") {
    for (SubgroupName name : kMeasureGroups) {
        if (name == SubgroupName::Z0) continue;
        const auto& g = subgroup(name);
        for (int l1 = -5; l1 <= 5; ++l1) {
            for (int l2 = -5; l2 <= 5; ++l2) {
                Weight w{l1, l2};
                bool stabilized = false;
                for (const auto& m : g.elements) {
                    if (m.det() == -1 && apply_to_weight(m, w) == w) stabilized = true;
                }
                CHECK(s_function(name, w).poly.is_zero() == stabilized);
            }
        }
    }
}

TEST_CASE("Weyl vectors") {
    CHECK(weyl_vector(SubgroupName::Z0) == Weight{0, 0});
    CHECK(weyl_vector(SubgroupName::Z2_2) == Weight{0, 1});
    CHECK(weyl_vector(SubgroupName::Z2_3) == Weight{1, 0});
    CHECK(weyl_vector(SubgroupName::D4_1) == Weight{1, 1});
    CHECK(weyl_vector(SubgroupName::D4_2) == Weight{1, 0});
    CHECK(weyl_vector(SubgroupName::D6_1) == Weight{1, 0});
}

TEST_CASE("anti-symmetric orbit sum of the Weyl vector for PSU(3)") {
    // w1 - w1^-1 - w2 + w2^-1 + w1^-1 w2 - w1 w2^-1
    auto s = s_function(SubgroupName::D6_1, {1, 0}).poly;
    CHECK(s == make_poly({{{1, 0}, 1}, {{-1, 0}, -1}, {{0, 1}, -1}, {{0, -1}, 1},
                          {{-1, 1}, 1}, {{1, -1}, -1}}));
}

TEST_CASE("characters of the fundamental generators match their closed forms") {
    CHECK(character(SubgroupName::D4_1, {1, 0}).poly ==
          make_poly({{{1, 0}, 1}, {{-1, 0}, 1}}));
    CHECK(character(SubgroupName::D4_1, {0, 1}).poly ==
          make_poly({{{0, 1}, 1}, {{0, -1}, 1}}));

    CHECK(character(SubgroupName::Z2_3, {1, 0}).poly ==
          make_poly({{{1, 0}, 1}, {{0, 1}, 1}}));
    CHECK(character(SubgroupName::Z2_3, {1, 1}).poly == make_poly({{{1, 1}, 1}}));

    CHECK(character(SubgroupName::Z2_2, {1, 0}).poly == make_poly({{{1, 0}, 1}}));
    CHECK(character(SubgroupName::Z2_2, {0, 1}).poly ==
          make_poly({{{0, 1}, 1}, {{0, -1}, 1}}));

    CHECK(character(SubgroupName::D4_2, {1, 0}).poly ==
          make_poly({{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}}));
    CHECK(character(SubgroupName::D4_2, {1, 1}).poly ==
          make_poly({{{0, 0}, 1}, {{1, 1}, 1}, {{-1, -1}, 1}}));

    CHECK(character(SubgroupName::D6_1, {1, 0}).poly ==
          make_poly({{{0, 0}, 2}, {{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1},
                     {{1, -1}, 1}, {{-1, 1}, 1}}));
    CHECK(character(SubgroupName::D6_1, {1, 1}).poly ==
          make_poly({{{0, 0}, 1}, {{1, 1}, 1}, {{1, -2}, 1}, {{-2, 1}, 1}, {{1, 0}, 1},
                     {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}, {{1, -1}, 1}, {{-1, 1}, 1}}));

    for (SubgroupName name : kMeasureGroups) {
        CHECK(character(name, {0, 0}).poly == LaurentPoly::one());
    }
}

TEST_CASE("characters are group-invariant and positive-dimensional") {
    testing::Rng rng(0xc4a1);
    for (SubgroupName name : kMeasureGroups) {
        const auto& g = subgroup(name);
        for (int i = 0; i < 10; ++i) {
            Weight w = name == SubgroupName::Z0
                           ? Weight{rng.uniform_int(-4, 4), rng.uniform_int(-4, 4)}
                           : canonical_rep(g, {rng.uniform_int(-6, 6), rng.uniform_int(-6, 6)});
            const auto& chi = character(name, w).poly;
            if (chi.is_zero()) continue;
            // invariance: exponent set closed under the weight action with equal coefficients
            for (const auto& m : g.elements) {
                for (const auto& [e, c] : chi.terms()) {
                    Weight img = apply_to_weight(m, {e.e1, e.e2});
                    CHECK(chi.coeff({img.l1, img.l2}) == c);
                }
            }
            if (name != SubgroupName::Z0) {
                CHECK(dimension_at_identity(name, w) > 0);
            }
        }
    }
}

TEST_CASE("fundamental generator tables") {
    auto d42 = fundamental_generators(SubgroupName::D4_2);
    CHECK(d42.rho1 == Weight{1, 0});
    CHECK(d42.rho2 == Weight{1, 1});
    CHECK(d42.so4_weight);

    auto z22 = fundamental_generators(SubgroupName::Z2_2);
    CHECK(z22.rho1 == Weight{1, 0});
    CHECK(z22.rho2 == Weight{0, 1});
    CHECK(!z22.so4_weight);
    CHECK(z22.a_const == 1.0);

    auto z0 = fundamental_generators(SubgroupName::Z0);
    CHECK(z0.rho1 == Weight{1, 0});
    CHECK(z0.rho2 == Weight{0, 1});

    CHECK_THROWS_AS(fundamental_generators(SubgroupName::Z4), std::invalid_argument);
    CHECK_THROWS_AS(fundamental_generators(SubgroupName::D8), std::invalid_argument);
}

TEST_CASE("fusion examples") {
    auto f1 = fuse(SubgroupName::D4_1, {1, 0}, {1, 0});
    CHECK(f1 == std::vector<std::pair<Weight, long long>>{{{0, 0}, 1}, {{2, 0}, 1}});

    testing::Rng rng(0xc4a2);
    for (SubgroupName name : kMeasureGroups) {
        Weight b = random_strict(rng, name, 4);
        auto f = fuse(name, {0, 0}, b);
        CHECK(f == std::vector<std::pair<Weight, long long>>{{b, 1}});
    }

    auto f3 = fuse(SubgroupName::Z2_3, {1, 0}, {1, 0});
    CHECK(f3 == std::vector<std::pair<Weight, long long>>{{{1, 1}, 1}, {{2, 0}, 1}});
}

TEST_CASE("fusion is commutative and dimension-multiplicative") {
    testing::Rng rng(0xc4a3);
    for (SubgroupName name : kMeasureGroups) {
        if (name == SubgroupName::Z0) continue;
        for (int i = 0; i < 6; ++i) {
            const auto& g = subgroup(name);
            Weight a = canonical_rep(g, {rng.uniform_int(-4, 4), rng.uniform_int(-4, 4)});
            Weight b = canonical_rep(g, {rng.uniform_int(-4, 4), rng.uniform_int(-4, 4)});
            if (character(name, a).poly.is_zero() || character(name, b).poly.is_zero()) continue;
            auto fab = fuse(name, a, b);
            CHECK(fab == fuse(name, b, a));
            long long lhs = dimension_at_identity(name, a) * dimension_at_identity(name, b);
            long long rhs = 0;
            for (const auto& [nu, m] : fab) rhs += m * dimension_at_identity(name, nu);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("orthogonality of orbit functions on strictly dominant weights") {
    testing::Rng rng(0xc4a4);
    for (SubgroupName name : kMeasureGroups) {
        const BigInt order = subgroup(name).order();
        for (int i = 0; i < 20; ++i) {
            Weight a = random_strict(rng, name);
            Weight b = random_strict(rng, name);
            for (OrbitKind kind : {OrbitKind::C, OrbitKind::S}) {
                BigInt got = orthogonality_check(name, a, b, kind);
                CHECK(got == (a == b ? order : BigInt(0)));
            }
        }
    }
}

TEST_CASE("orthogonality examples") {
    // (1,1) is fixed by the swap reflection in D4_2, so its S-sum cancels and
    // the pairing vanishes; the strictly dominant weight (2,1) carries the
    // full group order.
    CHECK(orthogonality_check(SubgroupName::D4_2, {1, 1}, {1, 1}, OrbitKind::S) == 0);
    CHECK(orthogonality_check(SubgroupName::D4_2, {2, 1}, {2, 1}, OrbitKind::S) == 4);
    CHECK(orthogonality_check(SubgroupName::D6_1, {2, 1}, {3, 1}, OrbitKind::C) == 0);
    CHECK(orthogonality_check(SubgroupName::Z2_2, {1, 1}, {1, 1}, OrbitKind::C) == 2);
}

TEST_CASE("conjugation automorphism of the character ring") {
    // conj(chi_w) = chi_{wbar}; for PSU(3) wbar = (l1+l2, -l2), for U(2)
    // wbar = (-l2, -l1).
    testing::Rng rng(0xc4a5);
    for (int i = 0; i < 12; ++i) {
        Weight w = random_strict(rng, SubgroupName::D6_1, 5);
        Weight wbar = conjugate_weight(SubgroupName::D6_1, w);
        CHECK(wbar == Weight{w.l1 + w.l2, -w.l2});
        CHECK(character(SubgroupName::D6_1, wbar).poly ==
              character(SubgroupName::D6_1, w).poly.conjugate());
    }
    for (int i = 0; i < 12; ++i) {
        Weight w = random_strict(rng, SubgroupName::Z2_3, 5);
        Weight wbar = conjugate_weight(SubgroupName::Z2_3, w);
        CHECK(wbar == Weight{-w.l2, -w.l1});
        CHECK(character(SubgroupName::Z2_3, wbar).poly ==
              character(SubgroupName::Z2_3, w).poly.conjugate());
    }
}
