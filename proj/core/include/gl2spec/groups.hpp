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

#ifndef GL2SPEC_GROUPS_HPP
#define GL2SPEC_GROUPS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gl2spec {

// 2x2 integer matrix with determinant +-1.  These are the elements of the
// finite subgroups of GL(2,Z).
struct IntMatrix2 {
    int a11 = 1, a12 = 0, a21 = 0, a22 = 1;

    constexpr int det() const { return a11 * a22 - a12 * a21; }

    constexpr IntMatrix2 operator*(const IntMatrix2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    constexpr IntMatrix2 operator-() const { return {-a11, -a12, -a21, -a22}; }

    // Inverse via the adjugate; only valid for det = +-1.
    constexpr IntMatrix2 inverse() const {
        const int d = det();
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }

    constexpr bool operator==(const IntMatrix2&) const = default;
    constexpr bool operator<(const IntMatrix2& o) const {
        return std::array{a11, a12, a21, a22} < std::array{o.a11, o.a12, o.a21, o.a22};
    }

    static constexpr IntMatrix2 identity() { return {}; }
    std::string to_string() const;
};

// Generators named as in the classification of the finite subgroups.
constexpr IntMatrix2 kT2{1, 0, 0, -1};        // reflection fixing the first axis
constexpr IntMatrix2 kT2Prime{0, 1, 1, 0};    // coordinate swap
constexpr IntMatrix2 kT3{0, -1, 1, -1};       // order-3 rotation
constexpr IntMatrix2 kT4{0, -1, 1, 0};        // order-4 rotation
constexpr IntMatrix2 kT6{0, 1, -1, 1};        // order-6 rotation
constexpr IntMatrix2 kMinusI{-1, 0, 0, -1};

enum class SubgroupName {
    Z0, Z2_1, Z3, Z4, Z6,            // rotation subgroups (inside SL(2,Z))
    Z2_2, Z2_3, D4_1, D4_2, D6_1, D6_2, D8, D12  // reflection subgroups
};

constexpr std::array<SubgroupName, 13> kAllSubgroups = {
    SubgroupName::Z0,   SubgroupName::Z2_1, SubgroupName::Z3,   SubgroupName::Z4,
    SubgroupName::Z6,   SubgroupName::Z2_2, SubgroupName::Z2_3, SubgroupName::D4_1,
    SubgroupName::D4_2, SubgroupName::D6_1, SubgroupName::D6_2, SubgroupName::D8,
    SubgroupName::D12};

// The six groups for which spectral measures are computed.
constexpr std::array<SubgroupName, 6> kMeasureGroups = {
    SubgroupName::Z0,   SubgroupName::Z2_2, SubgroupName::Z2_3,
    SubgroupName::D4_1, SubgroupName::D4_2, SubgroupName::D6_1};

std::string_view subgroup_name_string(SubgroupName name);
SubgroupName parse_subgroup_name(std::string_view s);  // throws std::invalid_argument

// Exponent pair on the weight lattice Z^2.
struct Weight {
    int l1 = 0, l2 = 0;
    constexpr bool operator==(const Weight&) const = default;
    constexpr bool operator<(const Weight& o) const {
        return std::array{l1, l2} < std::array{o.l1, o.l2};
    }
    constexpr Weight operator+(const Weight& o) const { return {l1 + o.l1, l2 + o.l2}; }
    constexpr Weight operator-() const { return {-l1, -l2}; }
    std::string to_string() const;
};

// Weights transform as row vectors, w -> w*g.  With the matrix action
// t -> g*t on torus angles this keeps <w*g, t> = <w, g*t>, so orbit sums in
// the weight variables are invariant functions on the torus.
constexpr Weight apply_to_weight(const IntMatrix2& g, Weight w) {
    return {w.l1 * g.a11 + w.l2 * g.a21, w.l1 * g.a12 + w.l2 * g.a22};
}

struct FiniteSubgroup {
    SubgroupName name;
    std::vector<IntMatrix2> elements;    // full closure, identity first, sorted after
    std::vector<IntMatrix2> generators;
    std::string lie_group_label;         // compact rank-two Lie group with this Weyl group
    bool in_frak_G = false;              // true iff some element has det -1

    int order() const { return static_cast<int>(elements.size()); }
};

FiniteSubgroup build_subgroup(SubgroupName name);
FiniteSubgroup build_subgroup(std::string_view name);
const FiniteSubgroup& subgroup(SubgroupName name);  // cached instance

struct OrbitResult {
    Weight representative;        // canonical orbit label (only set for reflection groups)
    std::vector<Weight> points;   // distinct orbit points, sorted
    int stabilizer_order = 1;
};

OrbitResult orbit(const FiniteSubgroup& group, Weight w);

// Canonical orbit representative.  Orbit points inside the closed wedge
// 0 <= l2 <= l1 are preferred; remaining ties are broken by largest l1 then
// largest l2.  Only defined for the reflection subgroups, where the wedge
// meets every orbit at most once.
Weight canonical_rep(const FiniteSubgroup& group, Weight w);
bool is_dominant(const FiniteSubgroup& group, Weight w);          // w == canonical_rep(w)
bool is_strictly_dominant(const FiniteSubgroup& group, Weight w); // dominant with trivial stabilizer

// Structural identities between the subgroups: semidirect factorisations,
// the GL(2,R) intertwiners H with H^2 = 2I (resp. the D6 intertwiner with
// H^-1 = -H/3), and normality of the listed inclusions.
struct RelationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_pass() const;
    std::string to_string() const;
};

RelationReport relation_checks();

}  // namespace gl2spec

#endif  // GL2SPEC_GROUPS_HPP
