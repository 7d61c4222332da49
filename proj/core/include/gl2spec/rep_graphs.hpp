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

#ifndef GL2SPEC_REP_GRAPHS_HPP
#define GL2SPEC_REP_GRAPHS_HPP

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "gl2spec/laurent.hpp"
#include "gl2spec/orbit_functions.hpp"

namespace gl2spec {

// G: fusion graph on Lie-group characters; H: action of a character on the
// torus characters (vertices are all of Z^2).
enum class GraphFamily { G, H };

GraphFamily parse_graph_family(std::string_view s);
std::string_view graph_family_string(GraphFamily f);

// Truncated representation graph.  Vertices near the truncation boundary are
// flagged so path counts can insist on a large enough radius.
struct FusionGraph {
    GraphFamily family;
    SubgroupName group;
    Weight rho;
    int radius = 0;

    std::vector<Weight> vertices;  // sorted; index is the vertex id
    std::vector<bool> boundary;    // true if some outgoing edge was clipped
    struct Edge {
        int src, dst;
        long long mult;
    };
    std::vector<Edge> edges;  // sorted by (src, dst)
    int distinguished = -1;   // index of the (0,0) vertex

    int index_of(Weight w) const;  // -1 if absent
    int max_step = 1;              // largest exponent step of chi_rho
};

FusionGraph build_graph(GraphFamily family, SubgroupName group, Weight rho, int radius);

// Exact mixed moment phi(D1^m1 D1*^n1 D2^m2 D2*^n2) for the pair of graphs
// of the fundamental generators:
//   family H: constant term of chi1^m1 conj(chi1)^n1 chi2^m2 conj(chi2)^n2;
//   family G: multiplicity of the trivial character in the same product,
//             extracted as constant_term(product * |S_varrho|^2) / |Gamma|.
// powers = (m1, n1, m2, n2); the sum is capped (default 24).
BigInt moments_exact(GraphFamily family, SubgroupName group, std::array<int, 4> powers,
                     int power_cap = 24);

// Path-count moment from the distinguished vertex: the number of m-step
// forward / n-step reversed path pairs meeting at a common vertex, weighted
// by edge multiplicities.  Requires radius > (m+n) * max_step so truncation
// cannot clip a contributing path.
BigInt moments_paths(const FusionGraph& graph, int m, int n);

int distinguished_vertex(const FusionGraph& graph);

std::string export_dot(const FusionGraph& graph);
std::string export_json(const FusionGraph& graph);

}  // namespace gl2spec

#endif  // GL2SPEC_REP_GRAPHS_HPP
