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

#include <algorithm>
#include <map>

#include "gl2spec/groups.hpp"
#include "test_support.hpp"

using namespace gl2spec;

TEST_CASE("subgroup closures have the advertised orders and unit determinants") {
    const std::map<SubgroupName, int> expected = {
        {SubgroupName::Z0, 1},   {SubgroupName::Z2_1, 2}, {SubgroupName::Z3, 3},
        {SubgroupName::Z4, 4},   {SubgroupName::Z6, 6},   {SubgroupName::Z2_2, 2},
        {SubgroupName::Z2_3, 2}, {SubgroupName::D4_1, 4}, {SubgroupName::D4_2, 4},
        {SubgroupName::D6_1, 6}, {SubgroupName::D6_2, 6}, {SubgroupName::D8, 8},
        {SubgroupName::D12, 12}};
    for (auto [name, order] : expected) {
        const auto& g = subgroup(name);
        CHECK(g.order() == order);
        for (const auto& m : g.elements) CHECK(std::abs(m.det()) == 1);
        // closure under product and inverse
        for (const auto& a : g.elements) {
            for (const auto& b : g.elements) {
                CHECK(std::find(g.elements.begin(), g.elements.end(), a * b) != g.elements.end());
            }
            CHECK(std::find(g.elements.begin(), g.elements.end(), a.inverse()) !=
                  g.elements.end());
        }
    }
}

TEST_CASE("frak-G membership and determinant split") {
    for (SubgroupName name : kAllSubgroups) {
        const auto& g = subgroup(name);
        bool has_reflection = false;
        int det_minus = 0;
        for (const auto& m : g.elements) {
            if (m.det() == -1) {
                has_reflection = true;
                ++det_minus;
            }
        }
        CHECK(g.in_frak_G == has_reflection);
        if (g.in_frak_G) CHECK(2 * det_minus == g.order());
    }
}

TEST_CASE("build_subgroup examples") {
    auto z22 = build_subgroup("Z2_2");
    CHECK(z22.order() == 2);
    CHECK(std::find(z22.elements.begin(), z22.elements.end(), kT2) != z22.elements.end());

    auto z0 = build_subgroup("Z0");
    CHECK(z0.order() == 1);
    CHECK(z0.elements[0] == IntMatrix2::identity());

    auto d12 = build_subgroup("D12");
    CHECK(d12.order() == 12);

    CHECK_THROWS_AS(build_subgroup("Q8"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_subgroup("q"), doctest::Contains("valid names"),
                         std::invalid_argument);
}

TEST_CASE("orbit examples") {
    SUBCASE("D4_1 axis weight") {
        auto r = orbit(subgroup(SubgroupName::D4_1), {1, 0});
        CHECK(r.points == std::vector<Weight>{{-1, 0}, {1, 0}});
        CHECK(r.stabilizer_order == 2);
    }
    SUBCASE("origin is fixed by everything") {
        for (SubgroupName name : kAllSubgroups) {
            auto r = orbit(subgroup(name), {0, 0});
            CHECK(r.points == std::vector<Weight>{{0, 0}});
            CHECK(r.stabilizer_order == subgroup(name).order());
        }
    }
    SUBCASE("Z2_3 swaps coordinates") {
        auto r = orbit(subgroup(SubgroupName::Z2_3), {0, 1});
        CHECK(r.points == std::vector<Weight>{{0, 1}, {1, 0}});
        CHECK(r.stabilizer_order == 1);
    }
}

TEST_CASE("orbit-stabilizer identity on random weights") {
    testing::Rng rng(0x5eed0001);
    for (SubgroupName name : kAllSubgroups) {
        const auto& g = subgroup(name);
        for (int i = 0; i < 100; ++i) {
            Weight w{rng.uniform_int(-20, 20), rng.uniform_int(-20, 20)};
            auto r = orbit(g, w);
            CHECK(static_cast<int>(r.points.size()) * r.stabilizer_order == g.order());
        }
    }
}

TEST_CASE("canonical representatives") {
    CHECK(canonical_rep(subgroup(SubgroupName::Z2_3), {0, 1}) == Weight{1, 0});
    CHECK(canonical_rep(subgroup(SubgroupName::D4_1), {-3, 2}) == Weight{3, 2});
    for (SubgroupName name : kAllSubgroups) {
        if (!subgroup(name).in_frak_G && name != SubgroupName::Z0) continue;
        CHECK(canonical_rep(subgroup(name), {0, 0}) == Weight{0, 0});
    }
    CHECK_THROWS_AS(canonical_rep(subgroup(SubgroupName::Z4), {1, 0}), std::invalid_argument);
}

TEST_CASE("canonical_rep is idempotent and constant on orbits") {
    testing::Rng rng(0x5eed0002);
    for (SubgroupName name : kAllSubgroups) {
        const auto& g = subgroup(name);
        if (!g.in_frak_G && name != SubgroupName::Z0) continue;
        for (int i = 0; i < 100; ++i) {
            Weight w{rng.uniform_int(-15, 15), rng.uniform_int(-15, 15)};
            Weight rep = canonical_rep(g, w);
            CHECK(canonical_rep(g, rep) == rep);
            for (const auto& m : g.elements) {
                CHECK(canonical_rep(g, apply_to_weight(m, w)) == rep);
            }
        }
    }
}

TEST_CASE("canonical_rep picks the graded-lex maximum of the orbit") {
    // Fusion relies on leading terms of invariant polynomials being dominant,
    // which holds exactly when the canonical representative maximises
    // (l1+l2, l1) over its orbit.  This is a property of the six embeddings
    // carrying measures (the SU(3) embedding D6_2 has a different dominant
    // wedge and is outside the fusion machinery).
    testing::Rng rng(0x5eed0003);
    for (SubgroupName name : kMeasureGroups) {
        const auto& g = subgroup(name);
        if (!g.in_frak_G) continue;
        for (int i = 0; i < 200; ++i) {
            Weight w{rng.uniform_int(-12, 12), rng.uniform_int(-12, 12)};
            auto r = orbit(g, w);
            Weight grlex_max = r.points.front();
            for (Weight p : r.points) {
                auto key = [](Weight q) { return std::pair{q.l1 + q.l2, q.l1}; };
                if (key(p) > key(grlex_max)) grlex_max = p;
            }
            CHECK(canonical_rep(g, w) == grlex_max);
        }
    }
}

TEST_CASE("relation checks all pass") {
    auto report = relation_checks();
    for (const auto& c : report.checks) {
        INFO(c.name, " ", c.detail);
        CHECK(c.pass);
    }
    CHECK(report.all_pass());
}
