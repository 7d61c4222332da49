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

#include "gl2spec/rep_graphs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gl2spec {

GraphFamily parse_graph_family(std::string_view s) {
    if (s == "G" || s == "g") return GraphFamily::G;
    if (s == "H" || s == "h") return GraphFamily::H;
    throw std::invalid_argument("unknown graph family '" + std::string(s) + "'; use G or H");
}

std::string_view graph_family_string(GraphFamily f) {
    return f == GraphFamily::G ? "G" : "H";
}

int FusionGraph::index_of(Weight w) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || !(*it == w)) return -1;
    return static_cast<int>(it - vertices.begin());
}

FusionGraph build_graph(GraphFamily family, SubgroupName group, Weight rho, int radius) {
    if (radius <= 0) throw std::invalid_argument("graph radius must be positive");
    const auto& G = subgroup(group);

    FusionGraph graph;
    graph.family = family;
    graph.group = group;
    graph.rho = rho;
    graph.radius = radius;

    const LaurentPoly& chi = character(group, rho).poly;
    graph.max_step = std::max(1, chi.max_abs_exponent());

    auto in_box = [radius](Weight w) {
        return std::abs(w.l1) <= radius && std::abs(w.l2) <= radius;
    };

    if (family == GraphFamily::H) {
        for (int l1 = -radius; l1 <= radius; ++l1) {
            for (int l2 = -radius; l2 <= radius; ++l2) {
                graph.vertices.push_back({l1, l2});
            }
        }
    } else {
        std::set<Weight> verts;
        for (int l1 = -radius; l1 <= radius; ++l1) {
            for (int l2 = -radius; l2 <= radius; ++l2) {
                Weight w{l1, l2};
                if (group == SubgroupName::Z0 || canonical_rep(G, w) == w) verts.insert(w);
            }
        }
        graph.vertices.assign(verts.begin(), verts.end());
    }
    std::sort(graph.vertices.begin(), graph.vertices.end());
    graph.boundary.assign(graph.vertices.size(), false);

    std::map<std::pair<int, int>, long long> edge_mults;
    for (size_t src = 0; src < graph.vertices.size(); ++src) {
        Weight v = graph.vertices[src];
        if (family == GraphFamily::H) {
            for (const auto& [e, c] : chi.terms()) {
                Weight tgt{v.l1 + e.e1, v.l2 + e.e2};
                if (!in_box(tgt)) {
                    graph.boundary[src] = true;
                    continue;
                }
                edge_mults[{static_cast<int>(src), graph.index_of(tgt)}] +=
                    static_cast<long long>(c.get_si());
            }
        } else {
            for (const auto& [nu, mult] : fuse(group, rho, v)) {
                if (!in_box(nu)) {
                    graph.boundary[src] = true;
                    continue;
                }
                int dst = graph.index_of(nu);
                if (dst < 0) {
                    graph.boundary[src] = true;
                    continue;
                }
                edge_mults[{static_cast<int>(src), dst}] += mult;
            }
        }
    }
    graph.edges.reserve(edge_mults.size());
    for (const auto& [key, mult] : edge_mults) {
        graph.edges.push_back({key.first, key.second, mult});
    }
    graph.distinguished = graph.index_of({0, 0});
    return graph;
}

BigInt moments_exact(GraphFamily family, SubgroupName group, std::array<int, 4> powers,
                     int power_cap) {
    const auto [m1, n1, m2, n2] = powers;
    if (m1 < 0 || n1 < 0 || m2 < 0 || n2 < 0)
        throw std::invalid_argument("moment powers must be non-negative");
    if (m1 + n1 + m2 + n2 > power_cap)
        throw std::invalid_argument("total moment order " + std::to_string(m1 + n1 + m2 + n2) +
                                    " exceeds the cap " + std::to_string(power_cap));
    GeneratorTable gens = fundamental_generators(group);
    const LaurentPoly& chi1 = character(group, gens.rho1).poly;
    const LaurentPoly& chi2 = character(group, gens.rho2).poly;

    LaurentPoly product = LaurentPoly::one();
    if (m1) product = product * chi1.pow(m1);
    if (n1) product = product * chi1.conjugate().pow(n1);
    if (m2) product = product * chi2.pow(m2);
    if (n2) product = product * chi2.conjugate().pow(n2);

    if (family == GraphFamily::H || group == SubgroupName::Z0) {
        return product.constant_term();
    }
    // Trivial-character multiplicity via the Weyl integration identity:
    // <product, chi_0> = constant_term(product * S_rho * conj(S_rho)) / |Gamma|.
    const LaurentPoly srho = s_function(group, weyl_vector(group)).poly;
    BigInt numer = (product * srho * srho.conjugate()).constant_term();
    const BigInt order = subgroup(group).order();
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numer.get_mpz_t(), order.get_mpz_t());
    if (r != 0) {
        throw std::logic_error("trivial-multiplicity extraction was not an exact multiple of " +
                               order.get_str());
    }
    return q;
}

BigInt moments_paths(const FusionGraph& graph, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("path moment orders must be non-negative");
    const int required = (m + n) * graph.max_step + 1;
    if (graph.radius < required) {
        throw std::invalid_argument("graph radius " + std::to_string(graph.radius) +
                                    " too small for a length-" + std::to_string(m + n) +
                                    " walk; need radius >= " + std::to_string(required));
    }
    if (graph.distinguished < 0) throw std::logic_error("graph has no distinguished vertex");

    const size_t nv = graph.vertices.size();
    auto forward = [&](const std::vector<BigInt>& v) {
        std::vector<BigInt> out(nv, BigInt(0));
        for (const auto& e : graph.edges) out[e.dst] += v[e.src] * static_cast<long>(e.mult);
        return out;
    };

    std::vector<BigInt> fm(nv, BigInt(0));
    fm[graph.distinguished] = 1;
    for (int i = 0; i < m; ++i) fm = forward(fm);
    std::vector<BigInt> fn(nv, BigInt(0));
    fn[graph.distinguished] = 1;
    for (int i = 0; i < n; ++i) fn = forward(fn);

    // Pairs of forward walks (lengths m and n) meeting at a common vertex,
    // i.e. an m-step walk followed by an n-step reversed walk back to the
    // distinguished vertex.
    BigInt total = 0;
    for (size_t v = 0; v < nv; ++v) total += fm[v] * fn[v];
    return total;
}

int distinguished_vertex(const FusionGraph& graph) {
    if (graph.distinguished < 0) throw std::logic_error("graph does not contain (0,0)");
    return graph.distinguished;
}

std::string export_dot(const FusionGraph& graph) {
    std::ostringstream os;
    os << "digraph \"" << graph_family_string(graph.family) << "_"
       << subgroup_name_string(graph.group) << "_rho_" << graph.rho.l1 << "_" << graph.rho.l2
       << "\" {\n";
    for (size_t i = 0; i < graph.vertices.size(); ++i) {
        os << "  v" << i << " [label=\"" << graph.vertices[i].to_string() << "\"";
        if (static_cast<int>(i) == graph.distinguished) os << ", shape=doublecircle";
        if (graph.boundary[i]) os << ", style=dashed";
        os << "];\n";
    }
    for (const auto& e : graph.edges) {
        os << "  v" << e.src << " -> v" << e.dst;
        if (e.mult != 1) os << " [label=\"" << e.mult << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string export_json(const FusionGraph& graph) {
    nlohmann::json j;
    j["family"] = std::string(graph_family_string(graph.family));
    j["group"] = std::string(subgroup_name_string(graph.group));
    j["rho"] = {graph.rho.l1, graph.rho.l2};
    j["vertices"] = nlohmann::json::array();
    for (size_t i = 0; i < graph.vertices.size(); ++i) {
        j["vertices"].push_back({{"id", i},
                                 {"label", {graph.vertices[i].l1, graph.vertices[i].l2}},
                                 {"boundary", static_cast<bool>(graph.boundary[i])}});
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : graph.edges) {
        j["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"mult", e.mult}});
    }
    j["distinguished"] = graph.distinguished;
    return j.dump(2) + "\n";
}

}  // namespace gl2spec
