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

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

#include "gl2spec/densities.hpp"
#include "gl2spec/discrete_measures.hpp"
#include "gl2spec/domains.hpp"
#include "gl2spec/jacobians.hpp"
#include "gl2spec/orbit_functions.hpp"
#include "gl2spec/rep_graphs.hpp"
#include "gl2spec/sequences.hpp"
#include "gl2spec/verify.hpp"

using namespace gl2spec;
using nlohmann::json;

namespace {

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

Weight parse_weight(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("weight", "expected 'l1,l2', got '" + s + "'");
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

void print_num(double v) { std::printf("%.15g", v); }

int cmd_groups_list() {
    std::printf("%-6s %-5s %-9s %-16s %-28s\n", "name", "order", "in frak-G", "Lie group",
                "generators");
    for (SubgroupName name : kAllSubgroups) {
        const auto& g = subgroup(name);
        std::string gens;
        for (const auto& m : g.generators) {
            if (!gens.empty()) gens += ", ";
            gens += m.to_string();
        }
        std::printf("%-6s %-5d %-9s %-16s %-28s\n",
                    std::string(subgroup_name_string(name)).c_str(), g.order(),
                    g.in_frak_G ? "yes" : "no", g.lie_group_label.c_str(), gens.c_str());
    }
    return 0;
}

int cmd_groups_verify() {
    auto report = relation_checks();
    std::fputs(report.to_string().c_str(), stdout);
    return report.all_pass() ? 0 : 1;
}

int cmd_character_show(const std::string& group, const std::string& weight) {
    SubgroupName g = parse_subgroup_name(group);
    Weight w = parse_weight(weight);
    if (g != SubgroupName::Z0) w = canonical_rep(subgroup(g), w);
    const auto& chi = character(g, w);
    std::printf("# character of %s at weight %s\n", group.c_str(), w.to_string().c_str());
    std::fputs(chi.poly.serialize().c_str(), stdout);
    return 0;
}

int cmd_character_fuse(const std::string& group, const std::string& a, const std::string& b) {
    SubgroupName g = parse_subgroup_name(group);
    auto parts = fuse(g, parse_weight(a), parse_weight(b));
    json out = json::array();
    for (const auto& [nu, mult] : parts) {
        out.push_back({{"weight", {nu.l1, nu.l2}}, {"multiplicity", mult}});
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_graph_build(const std::string& family, const std::string& group,
                    const std::string& rho, int radius, const std::string& format,
                    const std::string& output) {
    auto graph = build_graph(parse_graph_family(family), parse_subgroup_name(group),
                             parse_weight(rho), radius);
    std::string text = format == "dot" ? export_dot(graph) : export_json(graph);
    if (output.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream(output) << text;
    }
    return 0;
}

int cmd_graph_moments(const std::string& family, const std::string& group,
                      const std::string& rho, int m, int n) {
    GraphFamily fam = parse_graph_family(family);
    SubgroupName g = parse_subgroup_name(group);
    Weight r = parse_weight(rho);
    GeneratorTable gens = fundamental_generators(g);
    std::array<int, 4> powers{};
    if (r == gens.rho1) {
        powers = {m, n, 0, 0};
    } else if (r == gens.rho2) {
        powers = {0, 0, m, n};
    } else {
        throw CLI::ValidationError("rho", "rho must be one of the fundamental generators");
    }
    BigInt exact = moments_exact(fam, g, powers);
    const auto& chi = character(g, r).poly;
    int radius = (m + n) * std::max(1, chi.max_abs_exponent()) + 1;
    BigInt paths = moments_paths(build_graph(fam, g, r, radius), m, n);
    std::printf("constant-term: %s\npath-count:    %s\n", exact.get_str().c_str(),
                paths.get_str().c_str());
    return exact == paths ? 0 : 1;
}

int cmd_moments(const std::string& family, const std::string& group, const std::string& rho,
                int upto) {
    GraphFamily fam = parse_graph_family(family);
    SubgroupName g = parse_subgroup_name(group);
    Weight r = parse_weight(rho);
    const auto& chi = character(g, r).poly;
    int radius = upto * std::max(1, chi.max_abs_exponent()) + 1;
    auto graph = build_graph(fam, g, r, radius);
    std::printf("# phi(Delta^m) for %s family %s rho=%s, m = 0..%d\n", group.c_str(),
                family.c_str(), r.to_string().c_str(), upto);
    for (int m = 0; m <= upto; ++m) {
        std::printf("%d %s\n", m, moments_paths(graph, m, 0).get_str().c_str());
    }
    return 0;
}

int cmd_jacobian_check(const std::string& group, int samples, uint64_t seed) {
    Rng rng(seed);
    auto run_group = [&](SubgroupName g) {
        double worst_abs = 0, worst_sq = 0, worst_conj = 0;
        for (int i = 0; i < samples; ++i) {
            TorusPoint t{rng.uniform(), rng.uniform()};
            auto [x, y] = invariant_coords(g, t);
            Complex jt = jacobian_theta(g, t);
            worst_abs = std::max(worst_abs, std::abs(std::abs(jt) -
                                                     std::abs(jacobian_xy(g, x, y))) /
                                                std::max(1.0, std::abs(jt)));
            Complex sqf = jacobian_sq_invariant(g, x, y);
            worst_sq = std::max(worst_sq,
                                std::abs(jt * jt - sqf) / std::max(1.0, std::abs(sqf)));
            if (g != SubgroupName::D6_1)
                worst_conj = std::max(worst_conj, conjecture_identity_residual(g, t));
        }
        std::printf("%-5s |J_theta|-|J_xy|: %.3e   J^2 form: %.3e   4pi^2|S|=a|J|: %.3e\n",
                    std::string(subgroup_name_string(g)).c_str(), worst_abs, worst_sq,
                    worst_conj);
    };
    if (group == "all") {
        for (SubgroupName g : kMeasureGroups) run_group(g);
        double worst_rel = 0;
        for (int i = 0; i < samples; ++i) {
            TorusPoint t{rng.uniform(), rng.uniform()};
            worst_rel = std::max(worst_rel, relation_residuals(t).max_residual());
        }
        std::printf("subgroup relations (2Re identities, boundary cubic): %.3e\n", worst_rel);
    } else {
        run_group(parse_subgroup_name(group));
    }
    return 0;
}

int cmd_domain_sample(const std::string& group, int n, uint64_t seed, bool csv) {
    SubgroupName g = parse_subgroup_name(group);
    Rng rng(seed);
    if (csv) std::printf("re_x,im_x,re_y,im_y,kind\n");
    for (int i = 0; i < n; ++i) {
        TorusPoint t{rng.uniform(), rng.uniform()};
        auto [x, y] = invariant_coords(g, t);
        std::printf("%.15g,%.15g,%.15g,%.15g,interior\n", x.real(), x.imag(), y.real(),
                    y.imag());
    }
    // boundary cloud from the reflection-fixed lines
    for (int i = 0; i < n; ++i) {
        double s = rng.uniform();
        TorusPoint t{s, 0.0};
        switch (g) {
            case SubgroupName::Z2_2:
            case SubgroupName::D4_1:
                t = {s, 0.0};
                break;
            case SubgroupName::Z2_3:
            case SubgroupName::D4_2:
            case SubgroupName::D6_1:
                t = {s, s};
                break;
            default:
                t = {s, 0.0};
                break;
        }
        auto [x, y] = invariant_coords(g, t);
        std::printf("%.15g,%.15g,%.15g,%.15g,boundary\n", x.real(), x.imag(), y.real(),
                    y.imag());
    }
    return 0;
}

int cmd_density_eval(const std::string& id, const std::vector<double>& at) {
    const auto& entry = catalog_entry(id);
    double value = 0.0;
    if (entry.support == SupportKind::Joint) {
        if (at.size() != 2 && at.size() != 4)
            throw CLI::ValidationError("--at", "joint entries take x,y or re_x,im_x,re_y,im_y");
        std::complex<double> x, y;
        if (at.size() == 2) {
            x = at[0];
            y = at[1];
        } else {
            x = {at[0], at[1]};
            y = {at[2], at[3]};
        }
        value = eval_joint_density(entry, x, y);
    } else if (at.size() == 2) {
        value = eval_density(entry, at[0], at[1]);
    } else if (at.size() == 1) {
        value = eval_density(entry, at[0]);
    } else {
        throw CLI::ValidationError("--at", "expected one or two coordinates");
    }
    print_num(value);
    std::printf("\n");
    return 0;
}

int cmd_density_sample(const std::string& id, int n, bool /*csv*/) {
    const auto& entry = catalog_entry(id);
    switch (entry.support) {
        case SupportKind::Interval: {
            std::printf("x,weight\n");
            for (int i = 1; i < n; ++i) {
                double x = entry.a + (entry.b - entry.a) * i / n;
                std::printf("%.15g,%.15g\n", x, eval_density(entry, x));
            }
            return 0;
        }
        case SupportKind::Circle: {
            std::printf("theta,weight\n");
            for (int i = 0; i < n; ++i) {
                double th = static_cast<double>(i) / n;
                std::printf("%.15g,%.15g\n", th, eval_density(entry, 0.0));
            }
            return 0;
        }
        case SupportKind::Disc: {
            std::printf("re,im,weight\n");
            int side = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(n))));
            for (int i = 0; i <= side; ++i) {
                for (int j = 0; j <= side; ++j) {
                    double u = -2.0 + 4.0 * i / side;
                    double v = -2.0 + 4.0 * j / side;
                    if (u * u + v * v > 4.0) continue;
                    std::printf("%.15g,%.15g,%.15g\n", u, v, eval_density(entry, u, v));
                }
            }
            return 0;
        }
        case SupportKind::PlaneRegion: {
            std::printf("re_y,im_y,weight\n");
            int side = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(n))));
            for (int i = 0; i <= side; ++i) {
                for (int j = 0; j <= side; ++j) {
                    double y1 = -2.0 + 12.0 * i / side;
                    double y2 = -4.0 + 8.0 * j / side;
                    if (d61::classify_y(y1, y2) == d61::Region::Outside) continue;
                    double w = eval_density(entry, y1, y2);
                    if (!std::isfinite(w)) continue;
                    std::printf("%.15g,%.15g,%.15g\n", y1, y2, w);
                }
            }
            return 0;
        }
        case SupportKind::Joint: {
            std::printf("x,y,weight\n");
            Rng rng(1);
            for (int i = 0; i < n; ++i) {
                TorusPoint t{rng.uniform(), rng.uniform()};
                auto [x, y] = invariant_coords(entry.group, t);
                double w = eval_joint_density(entry, x, y);
                if (!std::isfinite(w)) continue;
                std::printf("%.15g,%.15g,%.15g\n", x.real(), y.real(), w);
            }
            return 0;
        }
    }
    return 0;
}

int print_results(const std::vector<CheckResult>& results, bool as_json) {
    bool all = true;
    if (as_json) {
        json out = json::array();
        for (const auto& r : results) {
            out.push_back({{"name", r.name},
                           {"pass", r.pass},
                           {"seconds", r.seconds},
                           {"detail", r.detail}});
            all = all && r.pass;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::printf("[%s] %-72s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                        r.seconds, r.detail.empty() ? "" : "  ", r.detail.c_str());
            all = all && r.pass;
        }
    }
    if (!all) {
        std::printf("FAILED\n");
        return 1;
    }
    return 0;
}

int cmd_verify_measures(int max_order, bool as_json) {
    json out = json::array();
    bool all = true;
    for (const auto& entry : catalog()) {
        int order = entry.conjectural ? std::max(max_order, 10) : max_order;
        auto report = verify_measure(entry, order);
        bool pass = report.pass(1e-6);
        all = all && pass;
        if (as_json) {
            out.push_back({{"id", report.id},
                           {"conjectural", report.conjectural},
                           {"max_order", report.max_order},
                           {"max_rel_error", report.max_rel_error},
                           {"pass", pass}});
        } else {
            std::printf("[%s] %-22s order %-2d  max rel err %.3e%s\n", pass ? "PASS" : "FAIL",
                        report.id.c_str(), report.max_order, report.max_rel_error,
                        report.conjectural ? "  (conjectural)" : "");
        }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return all ? 0 : 1;
}

int cmd_report() {
    json out;
    out["groups"] = json::array();
    for (SubgroupName name : kAllSubgroups) {
        const auto& g = subgroup(name);
        out["groups"].push_back({{"name", std::string(subgroup_name_string(name))},
                                 {"order", g.order()},
                                 {"in_frak_G", g.in_frak_G},
                                 {"lie_group", g.lie_group_label}});
    }
    out["densities"] = json::array();
    for (const auto& e : catalog()) {
        out["densities"].push_back({{"id", e.id},
                                    {"group", std::string(subgroup_name_string(e.group))},
                                    {"generator", e.generator},
                                    {"family", std::string(graph_family_string(e.family))},
                                    {"conjectural", e.conjectural},
                                    {"description", e.description}});
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral measures of rank-two representation graphs"};
    app.require_subcommand(1);

    uint64_t seed = 20260808;
    app.add_option("--seed", seed, "seed for randomized checks");

    // groups
    auto* groups = app.add_subcommand("groups", "finite subgroups of GL(2,Z)");
    groups->require_subcommand(1);
    groups->add_subcommand("list", "print the 13 subgroups");
    groups->add_subcommand("verify", "check the structural relations");

    // character
    auto* character_cmd = app.add_subcommand("character", "formal characters");
    character_cmd->require_subcommand(1);
    std::string group = "D4_2", weight = "1,0", wa = "1,0", wb = "1,0";
    auto* show = character_cmd->add_subcommand("show", "print a character polynomial");
    show->add_option("--group", group)->required();
    show->add_option("--weight", weight)->required();
    auto* fuse_cmd = character_cmd->add_subcommand("fuse", "decompose a character product");
    fuse_cmd->add_option("--group", group)->required();
    fuse_cmd->add_option("--a", wa)->required();
    fuse_cmd->add_option("--b", wb)->required();

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "representation graphs");
    graph_cmd->require_subcommand(1);
    std::string family = "H", rho = "1,0", format = "json", output;
    int radius = 5, gm = 2, gn = 0;
    auto* gbuild = graph_cmd->add_subcommand("build", "build and export a truncated graph");
    gbuild->add_option("--family", family);
    gbuild->add_option("--group", group)->required();
    gbuild->add_option("--rho", rho);
    gbuild->add_option("--radius", radius);
    gbuild->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    gbuild->add_option("-o,--output", output);
    auto* gmom = graph_cmd->add_subcommand("moments", "mixed moment by both methods");
    gmom->add_option("--family", family);
    gmom->add_option("--group", group)->required();
    gmom->add_option("--rho", rho);
    gmom->add_option("--m", gm);
    gmom->add_option("--n", gn);

    // moments table
    auto* moments_cmd = app.add_subcommand("moments", "moment table of a generator");
    int upto = 8;
    moments_cmd->add_option("--family", family);
    moments_cmd->add_option("--group", group)->required();
    moments_cmd->add_option("--rho", rho);
    moments_cmd->add_option("--upto", upto);

    // jacobian
    auto* jac_cmd = app.add_subcommand("jacobian", "Jacobian identities");
    jac_cmd->require_subcommand(1);
    std::string jgroup = "all";
    int samples = 200;
    auto* jcheck = jac_cmd->add_subcommand("check", "max residuals at random torus points");
    jcheck->add_option("--group", jgroup);
    jcheck->add_option("--samples", samples);

    // domain
    auto* dom_cmd = app.add_subcommand("domain", "joint-spectrum domains");
    dom_cmd->require_subcommand(1);
    int npoints = 200;
    bool csv = false;
    auto* dsample = dom_cmd->add_subcommand("sample", "emit interior/boundary point clouds");
    dsample->add_option("--group", group)->required();
    dsample->add_option("--n", npoints);
    dsample->add_flag("--csv", csv);

    // density
    auto* den_cmd = app.add_subcommand("density", "spectral densities");
    den_cmd->require_subcommand(1);
    std::string id = "d4_2-h-rho1";
    std::vector<double> at;
    auto* deval = den_cmd->add_subcommand("eval", "evaluate a density");
    deval->add_option("--id", id)->required();
    deval->add_option("--at", at)->required()->expected(-1);
    auto* dsample2 = den_cmd->add_subcommand("sample", "CSV sample of a density");
    dsample2->add_option("--id", id)->required();
    dsample2->add_option("--n", npoints);
    dsample2->add_flag("--csv", csv);
    auto* dlist = den_cmd->add_subcommand("list", "list the catalog");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    verify_cmd->require_subcommand(1);
    int order = 12, max_order = 8;
    bool as_json = false;
    auto* voeis = verify_cmd->add_subcommand("oeis", "quadrant walks vs squared Catalans");
    voeis->add_option("--n", order);
    auto* vmz = verify_cmd->add_subcommand("mz", "generating-function machinery");
    vmz->add_option("--n", order);
    auto* vmeas = verify_cmd->add_subcommand("measures", "quadrature moments vs exact oracles");
    vmeas->add_option("--max-order", max_order);
    vmeas->add_flag("--json", as_json);
    auto* vall = verify_cmd->add_subcommand("all", "the full acceptance suite");
    vall->add_flag("--json", as_json);

    auto* report_cmd = app.add_subcommand("report", "JSON overview of groups and densities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (groups->got_subcommand("list")) return cmd_groups_list();
        if (groups->got_subcommand("verify")) return cmd_groups_verify();
        if (character_cmd->got_subcommand("show")) return cmd_character_show(group, weight);
        if (character_cmd->got_subcommand("fuse")) return cmd_character_fuse(group, wa, wb);
        if (graph_cmd->got_subcommand("build"))
            return cmd_graph_build(family, group, rho, radius, format, output);
        if (graph_cmd->got_subcommand("moments"))
            return cmd_graph_moments(family, group, rho, gm, gn);
        if (moments_cmd->parsed()) return cmd_moments(family, group, rho, upto);
        if (jac_cmd->got_subcommand("check")) return cmd_jacobian_check(jgroup, samples, seed);
        if (dom_cmd->got_subcommand("sample")) return cmd_domain_sample(group, npoints, seed, csv);
        if (den_cmd->got_subcommand("eval")) return cmd_density_eval(id, at);
        if (den_cmd->got_subcommand("sample")) return cmd_density_sample(id, npoints, csv);
        if (dlist->parsed()) {
            for (const auto& e : catalog()) {
                std::printf("%-22s %-5s rho%d %s%s\n", e.id.c_str(),
                            std::string(subgroup_name_string(e.group)).c_str(), e.generator,
                            e.description.c_str(), e.conjectural ? "  [conjectural]" : "");
            }
            return 0;
        }
        if (verify_cmd->got_subcommand("oeis")) {
            auto r = check_walk_conjecture(order);
            std::printf("[%s] %s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                        r.detail.c_str());
            return r.pass ? 0 : 1;
        }
        if (verify_cmd->got_subcommand("mz")) {
            auto r = check_mz_machinery(order);
            std::printf("[%s] %s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                        r.detail.c_str());
            return r.pass ? 0 : 1;
        }
        if (verify_cmd->got_subcommand("measures")) return cmd_verify_measures(max_order, as_json);
        if (verify_cmd->got_subcommand("all")) {
            VerifyOptions opts;
            opts.seed = seed;
            return print_results(run_verification(opts), as_json);
        }
        if (report_cmd->parsed()) return cmd_report();
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
