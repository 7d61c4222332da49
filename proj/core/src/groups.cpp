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

#include "gl2spec/groups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gl2spec {

std::string IntMatrix2::to_string() const {
    std::ostringstream os;
    os << "(" << a11 << " " << a12 << " / " << a21 << " " << a22 << ")";
    return os.str();
}

std::string Weight::to_string() const {
    return "(" + std::to_string(l1) + "," + std::to_string(l2) + ")";
}

namespace {

struct SubgroupDef {
    SubgroupName name;
    std::vector<IntMatrix2> generators;
    int order;
    const char* label;
};

const std::vector<SubgroupDef>& subgroup_defs() {
    static const std::vector<SubgroupDef> defs = {
        {SubgroupName::Z0, {IntMatrix2::identity()}, 1, "U(1) x U(1)"},
        {SubgroupName::Z2_1, {kMinusI}, 2, "-"},
        {SubgroupName::Z3, {kT3}, 3, "-"},
        {SubgroupName::Z4, {kT4}, 4, "-"},
        {SubgroupName::Z6, {kT6}, 6, "-"},
        {SubgroupName::Z2_2, {kT2}, 2, "U(1) x SU(2)"},
        {SubgroupName::Z2_3, {kT2Prime}, 2, "U(2)"},
        {SubgroupName::D4_1, {kMinusI, kT2}, 4, "SU(2) x SU(2)"},
        {SubgroupName::D4_2, {kMinusI, kT2Prime}, 4, "SO(4)"},
        {SubgroupName::D6_1, {kT3, kT2Prime}, 6, "PSU(3)"},
        {SubgroupName::D6_2, {kT3, -kT2Prime}, 6, "SU(3)"},
        {SubgroupName::D8, {kT4, kT2Prime}, 8, "Sp(2)"},
        {SubgroupName::D12, {kT6, kT2Prime}, 12, "G2"},
    };
    return defs;
}

}  // namespace

std::string_view subgroup_name_string(SubgroupName name) {
    switch (name) {
        case SubgroupName::Z0: return "Z0";
        case SubgroupName::Z2_1: return "Z2_1";
        case SubgroupName::Z3: return "Z3";
        case SubgroupName::Z4: return "Z4";
        case SubgroupName::Z6: return "Z6";
        case SubgroupName::Z2_2: return "Z2_2";
        case SubgroupName::Z2_3: return "Z2_3";
        case SubgroupName::D4_1: return "D4_1";
        case SubgroupName::D4_2: return "D4_2";
        case SubgroupName::D6_1: return "D6_1";
        case SubgroupName::D6_2: return "D6_2";
        case SubgroupName::D8: return "D8";
        case SubgroupName::D12: return "D12";
    }
    return "?";
}

SubgroupName parse_subgroup_name(std::string_view s) {
    for (SubgroupName n : kAllSubgroups) {
        if (subgroup_name_string(n) == s) return n;
    }
    std::string valid;
    for (SubgroupName n : kAllSubgroups) {
        if (!valid.empty()) valid += ", ";
        valid += subgroup_name_string(n);
    }
    throw std::invalid_argument("unknown subgroup name '" + std::string(s) +
                                "'; valid names: " + valid);
}

FiniteSubgroup build_subgroup(SubgroupName name) {
    const SubgroupDef* def = nullptr;
    for (const auto& d : subgroup_defs()) {
        if (d.name == name) def = &d;
    }
    if (!def) throw std::invalid_argument("unknown subgroup");

    std::set<IntMatrix2> closure{IntMatrix2::identity()};
    for (const auto& g : def->generators) closure.insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<IntMatrix2> current(closure.begin(), closure.end());
        for (const auto& a : current) {
            for (const auto& b : current) {
                if (closure.insert(a * b).second) grew = true;
            }
            if (closure.insert(a.inverse()).second) grew = true;
        }
        if (closure.size() > 16) throw std::logic_error("subgroup closure exceeded order 12");
    }

    FiniteSubgroup out;
    out.name = name;
    out.elements.assign(closure.begin(), closure.end());
    out.generators = def->generators;
    out.lie_group_label = def->label;
    out.in_frak_G = std::any_of(out.elements.begin(), out.elements.end(),
                                [](const IntMatrix2& g) { return g.det() == -1; });
    if (out.order() != def->order) {
        throw std::logic_error("subgroup " + std::string(subgroup_name_string(name)) +
                               " closed at order " + std::to_string(out.order()));
    }
    return out;
}

FiniteSubgroup build_subgroup(std::string_view name) {
    return build_subgroup(parse_subgroup_name(name));
}

const FiniteSubgroup& subgroup(SubgroupName name) {
    static std::map<SubgroupName, FiniteSubgroup> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, build_subgroup(name)).first;
    return it->second;
}

OrbitResult orbit(const FiniteSubgroup& group, Weight w) {
    OrbitResult out;
    std::set<Weight> pts;
    int stab = 0;
    for (const auto& g : group.elements) {
        Weight img = apply_to_weight(g, w);
        pts.insert(img);
        if (img == w) ++stab;
    }
    out.points.assign(pts.begin(), pts.end());
    out.stabilizer_order = stab;
    if (group.in_frak_G || group.name == SubgroupName::Z0) {
        out.representative = canonical_rep(group, w);
    } else {
        out.representative = w;
    }
    return out;
}

namespace {

bool in_wedge(Weight w) { return 0 <= w.l2 && w.l2 <= w.l1; }

bool lex_greater(Weight a, Weight b) {
    if (a.l1 != b.l1) return a.l1 > b.l1;
    return a.l2 > b.l2;
}

}  // namespace

Weight canonical_rep(const FiniteSubgroup& group, Weight w) {
    if (!group.in_frak_G && group.name != SubgroupName::Z0) {
        throw std::invalid_argument(
            "canonical representatives are defined only for the reflection subgroups; '" +
            std::string(subgroup_name_string(group.name)) +
            "' is a rotation subgroup of SL(2,Z)");
    }
    bool have = false;
    bool have_wedge = false;
    Weight best{};
    for (const auto& g : group.elements) {
        Weight img = apply_to_weight(g, w);
        bool img_wedge = in_wedge(img);
        if (!have || (img_wedge && !have_wedge) ||
            (img_wedge == have_wedge && lex_greater(img, best))) {
            best = img;
            have = true;
            have_wedge = img_wedge;
        }
    }
    return best;
}

bool is_dominant(const FiniteSubgroup& group, Weight w) {
    return canonical_rep(group, w) == w;
}

bool is_strictly_dominant(const FiniteSubgroup& group, Weight w) {
    if (!is_dominant(group, w)) return false;
    for (const auto& g : group.elements) {
        if (g == IntMatrix2::identity()) continue;
        if (apply_to_weight(g, w) == w) return false;
    }
    return true;
}

namespace {

bool is_subgroup_of(const FiniteSubgroup& sub, const FiniteSubgroup& super) {
    for (const auto& g : sub.elements) {
        if (std::find(super.elements.begin(), super.elements.end(), g) == super.elements.end())
            return false;
    }
    return true;
}

bool is_normal_in(const FiniteSubgroup& sub, const FiniteSubgroup& super) {
    for (const auto& g : super.elements) {
        for (const auto& n : sub.elements) {
            IntMatrix2 conj = g * n * g.inverse();
            if (std::find(sub.elements.begin(), sub.elements.end(), conj) == sub.elements.end())
                return false;
        }
    }
    return true;
}

// N x H = G as a semidirect product: N normal in G, H <= G, N cap H = {I},
// |N| * |H| = |G|.
RelationCheck check_semidirect(SubgroupName n_name, SubgroupName h_name, SubgroupName g_name) {
    const auto& N = subgroup(n_name);
    const auto& H = subgroup(h_name);
    const auto& G = subgroup(g_name);
    RelationCheck out;
    out.name = std::string(subgroup_name_string(n_name)) + " x| " +
               std::string(subgroup_name_string(h_name)) + " = " +
               std::string(subgroup_name_string(g_name));
    bool sub_n = is_subgroup_of(N, G);
    bool sub_h = is_subgroup_of(H, G);
    bool normal = sub_n && is_normal_in(N, G);
    int common = 0;
    for (const auto& a : N.elements)
        for (const auto& b : H.elements)
            if (a == b) ++common;
    bool sizes = N.order() * H.order() == G.order();
    out.pass = sub_n && sub_h && normal && common == 1 && sizes;
    if (!out.pass) out.detail = "subgroup/normality/intersection test failed";
    return out;
}

// H g = g' H elementwise: H conjugates one subgroup onto the other inside
// GL(2,R).  scale is H*H (2I for the Z2/D4 intertwiner, -3I after inversion
// for the D6 one), so H g H^{-1} = (H g H) / scale stays integral.
RelationCheck check_intertwiner(const IntMatrix2& H, int scale, SubgroupName a_name,
                                SubgroupName b_name) {
    const auto& A = subgroup(a_name);
    const auto& B = subgroup(b_name);
    RelationCheck out;
    out.name = "H " + std::string(subgroup_name_string(a_name)) + " H^-1 = " +
               std::string(subgroup_name_string(b_name));
    bool ok = A.order() == B.order();
    for (const auto& g : A.elements) {
        IntMatrix2 m = H * g * H;  // = scale * (H g H^{-1})
        IntMatrix2 target{m.a11 / scale, m.a12 / scale, m.a21 / scale, m.a22 / scale};
        bool divides = target.a11 * scale == m.a11 && target.a12 * scale == m.a12 &&
                       target.a21 * scale == m.a21 && target.a22 * scale == m.a22;
        if (!divides ||
            std::find(B.elements.begin(), B.elements.end(), target) == B.elements.end()) {
            ok = false;
            out.detail = "conjugate of " + g.to_string() + " is not in the target group";
            break;
        }
    }
    out.pass = ok;
    return out;
}

}  // namespace

RelationReport relation_checks() {
    RelationReport report;

    report.checks.push_back(
        check_semidirect(SubgroupName::Z2_1, SubgroupName::Z2_2, SubgroupName::D4_1));
    report.checks.push_back(
        check_semidirect(SubgroupName::Z2_1, SubgroupName::Z2_3, SubgroupName::D4_2));
    report.checks.push_back(
        check_semidirect(SubgroupName::Z3, SubgroupName::Z2_3, SubgroupName::D6_1));
    report.checks.push_back(
        check_semidirect(SubgroupName::Z4, SubgroupName::Z2_3, SubgroupName::D8));
    report.checks.push_back(
        check_semidirect(SubgroupName::Z6, SubgroupName::Z2_3, SubgroupName::D12));

    const IntMatrix2 H{1, 1, 1, -1};  // H^2 = 2I
    {
        RelationCheck c;
        c.name = "H^2 = 2I";
        c.pass = (H * H == IntMatrix2{2, 0, 0, 2});
        report.checks.push_back(c);
    }
    report.checks.push_back(check_intertwiner(H, 2, SubgroupName::Z2_2, SubgroupName::Z2_3));
    report.checks.push_back(check_intertwiner(H, 2, SubgroupName::Z2_3, SubgroupName::Z2_2));
    report.checks.push_back(check_intertwiner(H, 2, SubgroupName::D4_1, SubgroupName::D4_2));
    report.checks.push_back(check_intertwiner(H, 2, SubgroupName::D4_2, SubgroupName::D4_1));

    // T2 and T2' are exchanged by H as rational matrices.
    {
        RelationCheck c;
        c.name = "H T2 H^-1 = T2'";
        IntMatrix2 m = H * kT2 * H;
        c.pass = (IntMatrix2{m.a11 / 2, m.a12 / 2, m.a21 / 2, m.a22 / 2} == kT2Prime);
        report.checks.push_back(c);
    }

    const IntMatrix2 HD6{1, -2, 2, -1};  // HD6^{-1} = -HD6/3
    {
        RelationCheck c;
        c.name = "H_D6^2 = -3I";
        c.pass = (HD6 * HD6 == IntMatrix2{-3, 0, 0, -3});
        report.checks.push_back(c);
    }
    report.checks.push_back(check_intertwiner(HD6, -3, SubgroupName::D6_1, SubgroupName::D6_2));
    report.checks.push_back(check_intertwiner(HD6, -3, SubgroupName::D6_2, SubgroupName::D6_1));

    return report;
}

bool RelationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const RelationCheck& c) { return c.pass; });
}

std::string RelationReport::to_string() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace gl2spec
