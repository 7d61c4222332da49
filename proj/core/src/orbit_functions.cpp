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

#include "gl2spec/orbit_functions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace gl2spec {

OrbitFunction c_function(SubgroupName group, Weight w) {
    const auto& G = subgroup(group);
    LaurentPoly p;
    for (const auto& g : G.elements) {
        Weight img = apply_to_weight(g, w);
        p.add_term({img.l1, img.l2}, 1);
    }
    return {OrbitKind::C, group, w, std::move(p)};
}

OrbitFunction s_function(SubgroupName group, Weight w) {
    const auto& G = subgroup(group);
    LaurentPoly p;
    for (const auto& g : G.elements) {
        Weight img = apply_to_weight(g, w);
        p.add_term({img.l1, img.l2}, g.det());
    }
    return {OrbitKind::S, group, w, std::move(p)};
}

Weight weyl_vector(SubgroupName group) {
    const auto& G = subgroup(group);
    if (!G.in_frak_G && group != SubgroupName::Z0) {
        throw std::invalid_argument("Weyl vector is defined for the reflection subgroups only");
    }
    if (group == SubgroupName::Z2_3) return {1, 0};  // two minima; fixed choice
    if (group == SubgroupName::Z0) return {0, 0};

    long best_norm = -1;
    std::vector<Weight> minima;
    for (int l1 = -4; l1 <= 4; ++l1) {
        for (int l2 = -4; l2 <= 4; ++l2) {
            Weight w{l1, l2};
            if (!is_strictly_dominant(G, w)) continue;
            long norm = static_cast<long>(l1) * l1 + static_cast<long>(l2) * l2;
            if (best_norm < 0 || norm < best_norm) {
                best_norm = norm;
                minima = {w};
            } else if (norm == best_norm) {
                minima.push_back(w);
            }
        }
    }
    if (minima.size() != 1) {
        throw std::logic_error("Weyl vector for " + std::string(subgroup_name_string(group)) +
                               " is not unique in the search ball");
    }
    return minima.front();
}

GeneratorTable fundamental_generators(SubgroupName group) {
    GeneratorTable t;
    t.group = group;
    switch (group) {
        case SubgroupName::Z0:
        case SubgroupName::Z2_2:
        case SubgroupName::D4_1:
            t.rho1 = {1, 0};
            t.rho2 = {0, 1};
            break;
        case SubgroupName::Z2_3:
        case SubgroupName::D4_2:
        case SubgroupName::D6_1:
            t.rho1 = {1, 0};
            t.rho2 = {1, 1};
            break;
        default:
            throw std::invalid_argument(
                "no fundamental generator table for '" +
                std::string(subgroup_name_string(group)) +
                "'; spectral measures are computed for Z0, Z2_2, Z2_3, D4_1, D4_2, D6_1");
    }
    t.varrho = weyl_vector(group);
    t.a_const = 1.0;
    t.so4_weight = (group == SubgroupName::D4_2);
    return t;
}

namespace {

struct CharKey {
    SubgroupName group;
    Weight w;
    bool operator<(const CharKey& o) const {
        if (group != o.group) return group < o.group;
        return w < o.w;
    }
};

std::map<CharKey, Character> g_char_cache;
std::shared_mutex g_char_mu;

Character compute_character(SubgroupName group, Weight w) {
    const auto& G = subgroup(group);
    if (group == SubgroupName::Z0) {
        return {group, w, LaurentPoly::monomial({w.l1, w.l2}, 1)};
    }
    if (canonical_rep(G, w) != w) {
        throw std::invalid_argument("character weight " + w.to_string() +
                                    " is not a canonical dominant weight for " +
                                    std::string(subgroup_name_string(group)));
    }
    const Weight rho = weyl_vector(group);
    LaurentPoly denom = s_function(group, rho).poly;
    LaurentPoly numer = s_function(group, w + rho).poly;
    if (numer.is_zero()) {
        return {group, w, LaurentPoly::zero()};  // w + rho hit a reflection wall
    }
    LaurentPoly quot;
    try {
        quot = numer.exact_divide_by(denom);
    } catch (const DivisionError& e) {
        throw std::logic_error("character division failed for " +
                               std::string(subgroup_name_string(group)) + " " + w.to_string() +
                               ": " + e.what());
    }
    return {group, w, std::move(quot)};
}

}  // namespace

const Character& character(SubgroupName group, Weight w) {
    CharKey key{group, w};
    {
        std::shared_lock lock(g_char_mu);
        auto it = g_char_cache.find(key);
        if (it != g_char_cache.end()) return it->second;
    }
    Character c = compute_character(group, w);
    std::unique_lock lock(g_char_mu);
    auto [it, inserted] = g_char_cache.try_emplace(key, std::move(c));
    return it->second;
}

std::vector<std::pair<Weight, long long>> fuse(SubgroupName group, Weight a, Weight b) {
    const auto& G = subgroup(group);
    LaurentPoly remainder = character(group, a).poly * character(group, b).poly;
    std::map<Weight, long long> parts;
    while (!remainder.is_zero()) {
        auto [lead, coeff] = remainder.leading_term();
        Weight nu{lead.e1, lead.e2};
        if (group != SubgroupName::Z0 && canonical_rep(G, nu) != nu) {
            throw std::runtime_error("fusion decomposition failed: leading weight " +
                                     nu.to_string() + " is not dominant");
        }
        if (coeff < 0) {
            throw std::runtime_error("fusion decomposition failed: negative multiplicity " +
                                     coeff.get_str() + " at " + nu.to_string());
        }
        long long mult = static_cast<long long>(coeff.get_si());
        parts[nu] += mult;
        remainder = remainder - character(group, nu).poly.scaled(coeff);
    }
    return {parts.begin(), parts.end()};
}

BigInt orthogonality_check(SubgroupName group, Weight a, Weight b, OrbitKind kind) {
    const LaurentPoly fa =
        (kind == OrbitKind::C ? c_function(group, a) : s_function(group, a)).poly;
    const LaurentPoly fb =
        (kind == OrbitKind::C ? c_function(group, b) : s_function(group, b)).poly;
    return (fa * fb.conjugate()).constant_term();
}

Weight conjugate_weight(SubgroupName group, Weight w) {
    // conj(chi_w) has exponent support -orbit(w), so the conjugate weight is
    // the canonical label of -w.  For D6_1 this is (l1+l2, -l2), for Z2_3 it
    // is (-l2, -l1); groups containing -I are self-conjugate.
    Weight bar{-w.l1, -w.l2};
    if (group == SubgroupName::Z0) return bar;
    return canonical_rep(subgroup(group), bar);
}

}  // namespace gl2spec
