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

#ifndef GL2SPEC_ORBIT_FUNCTIONS_HPP
#define GL2SPEC_ORBIT_FUNCTIONS_HPP

#include <utility>
#include <vector>

#include "gl2spec/groups.hpp"
#include "gl2spec/laurent.hpp"

namespace gl2spec {

enum class OrbitKind { C, S };

// Orbit sum over the group: C is unsigned, S is signed by det.
struct OrbitFunction {
    OrbitKind kind;
    SubgroupName group;
    Weight weight;
    LaurentPoly poly;
};

// Formal character chi_w = S_{w+rho} / S_rho, a group-invariant Laurent
// polynomial (the Weyl character formula for the Lie group with this Weyl
// group).
struct Character {
    SubgroupName group;
    Weight weight;
    LaurentPoly poly;
};

OrbitFunction c_function(SubgroupName group, Weight w);
OrbitFunction s_function(SubgroupName group, Weight w);

// The norm-minimal strictly dominant weight (the Weyl-vector analogue).
// Found by enumeration over a small ball and certified unique, except for
// Z2_3 where both (1,0) and (0,-1) are minimal and (1,0) is the fixed choice.
Weight weyl_vector(SubgroupName group);

// Fundamental generator pair, Weyl vector and spectral-measure constant for
// the six groups carrying measures.
struct GeneratorTable {
    SubgroupName group;
    Weight rho1, rho2;
    Weight varrho;
    double a_const = 1.0;    // weight a in 4 pi^2 |S_varrho| = a |J|
    bool so4_weight = false; // SO(4) uses the (1+y)^{-1} weight instead of a
};

GeneratorTable fundamental_generators(SubgroupName group);

// Memoized character; w must be a canonical dominant weight.
const Character& character(SubgroupName group, Weight w);

// Decomposition of chi_a * chi_b into characters by repeated subtraction of
// the graded-lex leading term.  Returns (weight, multiplicity) pairs sorted
// by weight.  Throws std::runtime_error if a leading term is not dominant or
// a multiplicity is negative (which would mean an inconsistent family).
std::vector<std::pair<Weight, long long>> fuse(SubgroupName group, Weight a, Weight b);

// constant_term(F_a * conj(F_b)) for F in {C,S}; equals delta_{a,b} |Gamma|
// on strictly dominant weights.
BigInt orthogonality_check(SubgroupName group, Weight a, Weight b, OrbitKind kind);

// Conjugate-representation weight: the graph automorphism under which the
// character ring closes (conj(chi_w) = chi_{conjugate_weight(w)}).
Weight conjugate_weight(SubgroupName group, Weight w);

}  // namespace gl2spec

#endif  // GL2SPEC_ORBIT_FUNCTIONS_HPP
