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

#include "gl2spec/rep_graphs.hpp"
#include "gl2spec/sequences.hpp"

using namespace gl2spec;

namespace {

std::vector<std::pair<Weight, long long>> out_edges(const FusionGraph& g, Weight v) {
    int src = g.index_of(v);
    REQUIRE(src >= 0);
    std::vector<std::pair<Weight, long long>> out;
    for (const auto& e : g.edges) {
        if (e.src == src) out.push_back({g.vertices[e.dst], e.mult});
    }
    return out;
}

}  // namespace

TEST_CASE("graph construction examples") {
    SUBCASE("H graph of U(2)'s first generator at the origin") {
        auto g = build_graph(GraphFamily::H, SubgroupName::Z2_3, {1, 0}, 3);
        auto edges = out_edges(g, {0, 0});
        CHECK(edges == std::vector<std::pair<Weight, long long>>{{{0, 1}, 1}, {{1, 0}, 1}});
    }
    SUBCASE("G graph of SU(2)xSU(2) at the origin") {
        auto g = build_graph(GraphFamily::G, SubgroupName::D4_1, {1, 0}, 3);
        auto edges = out_edges(g, {0, 0});
        CHECK(edges == std::vector<std::pair<Weight, long long>>{{{1, 0}, 1}});
    }
    SUBCASE("H graph of the torus is a shift") {
        auto g = build_graph(GraphFamily::H, SubgroupName::Z0, {1, 0}, 2);
        for (Weight v : g.vertices) {
            if (g.boundary[g.index_of(v)]) continue;
            CHECK(out_edges(g, v).size() == 1);
        }
    }
    SUBCASE("PSU(3) first generator has a double loop at every vertex") {
        auto g = build_graph(GraphFamily::H, SubgroupName::D6_1, {1, 0}, 3);
        auto edges = out_edges(g, {0, 0});
        bool found_loop = false;
        for (auto& [w, m] : edges) {
            if (w == Weight{0, 0}) {
                found_loop = true;
                CHECK(m == 2);
            }
        }
        CHECK(found_loop);
        CHECK(edges.size() == 7);
    }
    CHECK_THROWS_AS(build_graph(GraphFamily::H, SubgroupName::Z2_3, {1, 0}, 0),
                    std::invalid_argument);
}

TEST_CASE("distinguished vertex is the origin") {
    for (GraphFamily fam : {GraphFamily::G, GraphFamily::H}) {
        auto g = build_graph(fam, SubgroupName::D4_2, {1, 0}, 3);
        CHECK(g.vertices[distinguished_vertex(g)] == Weight{0, 0});
    }
}

TEST_CASE("exact moment examples") {
    CHECK(moments_exact(GraphFamily::H, SubgroupName::Z2_3, {2, 2, 0, 0}) == 6);
    CHECK(moments_exact(GraphFamily::G, SubgroupName::Z2_3, {3, 3, 0, 0}) == 5);
    CHECK(moments_exact(GraphFamily::G, SubgroupName::D4_2, {4, 0, 0, 0}) == 4);
    CHECK(moments_exact(GraphFamily::H, SubgroupName::D4_1, {2, 0, 0, 0}) == 2);
    // bipartite parity
    CHECK(moments_exact(GraphFamily::H, SubgroupName::D4_1, {3, 0, 0, 0}) == 0);
    CHECK(moments_exact(GraphFamily::G, SubgroupName::D4_2, {5, 0, 0, 0}) == 0);
    CHECK_THROWS_AS(moments_exact(GraphFamily::H, SubgroupName::Z2_3, {20, 20, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("path moments match the exact moments") {
    struct Pair {
        SubgroupName group;
        Weight rho;
        int slot;  // 0 -> rho1 powers, 1 -> rho2 powers
    };
    for (SubgroupName name : kMeasureGroups) {
        auto gens = fundamental_generators(name);
        for (int slot = 0; slot < 2; ++slot) {
            Weight rho = slot == 0 ? gens.rho1 : gens.rho2;
            for (GraphFamily fam : {GraphFamily::G, GraphFamily::H}) {
                const LaurentPoly& chi = character(name, rho).poly;
                int radius = 6 * std::max(1, chi.max_abs_exponent()) + 1;
                auto graph = build_graph(fam, name, rho, radius);
                for (int m = 0; m <= 3; ++m) {
                    for (int n = 0; n + m <= 6; ++n) {
                        std::array<int, 4> powers{};
                        powers[2 * slot] = m;
                        powers[2 * slot + 1] = n;
                        INFO(subgroup_name_string(name), " ", graph_family_string(fam), " rho",
                             slot + 1, " m=", m, " n=", n);
                        CHECK(moments_paths(graph, m, n) == moments_exact(fam, name, powers));
                    }
                }
            }
        }
    }
}

TEST_CASE("path moment examples") {
    auto h = build_graph(GraphFamily::H, SubgroupName::Z2_3, {1, 0}, 4);
    CHECK(moments_paths(h, 1, 1) == 2);

    auto g = build_graph(GraphFamily::G, SubgroupName::Z2_3, {1, 0}, 6);
    CHECK(moments_paths(g, 2, 2) == 2);  // second Catalan number

    auto g2 = build_graph(GraphFamily::G, SubgroupName::D4_2, {1, 0}, 4);
    CHECK(moments_paths(g2, 2, 0) == 1);

    CHECK_THROWS_WITH_AS(moments_paths(g2, 4, 4), doctest::Contains("radius"),
                         std::invalid_argument);
}

TEST_CASE("central binomial and Catalan moment sequences") {
    for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 6 - m; ++n) {
            BigInt h = moments_exact(GraphFamily::H, SubgroupName::Z2_3, {m, n, 0, 0});
            BigInt g = moments_exact(GraphFamily::G, SubgroupName::Z2_3, {m, n, 0, 0});
            if (m == n) {
                CHECK(h == central_binomial(m));
                CHECK(g == catalan(m));
            } else {
                CHECK(h == 0);
                CHECK(g == 0);
            }
        }
    }
    for (int n = 0; n <= 5; ++n) {
        CHECK(moments_exact(GraphFamily::G, SubgroupName::D4_2, {2 * n, 0, 0, 0}) ==
              squared_catalan(n));
    }
}

TEST_CASE("graph export") {
    auto g = build_graph(GraphFamily::H, SubgroupName::Z2_2, {0, 1}, 1);
    auto dot = export_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    CHECK(export_dot(g) == dot);  // deterministic

    auto js = export_json(g);
    CHECK(js.find("\"family\": \"H\"") != std::string::npos);
    CHECK(js.find("\"distinguished\"") != std::string::npos);
    CHECK(export_json(g) == js);
}
