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

#include "gl2spec/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gl2spec/densities.hpp"
#include "gl2spec/discrete_measures.hpp"
#include "gl2spec/domains.hpp"
#include "gl2spec/jacobians.hpp"
#include "gl2spec/quadrature.hpp"
#include "gl2spec/rep_graphs.hpp"
#include "gl2spec/sequences.hpp"

namespace gl2spec {

namespace {

constexpr double kPi = std::numbers::pi;

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

// splitmix64, reproducible across platforms
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
    TorusPoint torus_point() { return {uniform(), uniform()}; }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

}  // namespace

CheckResult check_central_binomial_moments(int max_m) {
    Timer timer;
    CheckResult out{"H-graph moments of U(2) rho1 are central binomials"};
    out.pass = true;
    for (int m = 0; m <= max_m && out.pass; ++m) {
        for (int n = 0; n <= max_m && out.pass; ++n) {
            BigInt got = moments_exact(GraphFamily::H, SubgroupName::Z2_3, {m, n, 0, 0});
            BigInt want = (m == n) ? central_binomial(m) : BigInt(0);
            if (got != want) {
                out.pass = false;
                out.detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " got " +
                             got.get_str();
            }
        }
    }
    out.seconds = timer.seconds();
    return out;
}

CheckResult check_catalan_moments(int max_m) {
    Timer timer;
    CheckResult out{"G-graph moments of U(2) rho1 are Catalan numbers"};
    out.pass = true;
    for (int m = 0; m <= max_m && out.pass; ++m) {
        for (int n = 0; n <= max_m && out.pass; ++n) {
            BigInt got = moments_exact(GraphFamily::G, SubgroupName::Z2_3, {m, n, 0, 0});
            BigInt want = (m == n) ? catalan(m) : BigInt(0);
            if (got != want) {
                out.pass = false;
                out.detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " got " +
                             got.get_str();
            }
        }
    }
    out.seconds = timer.seconds();
    return out;
}

CheckResult check_squared_catalan_moments(int max_n) {
    Timer timer;
    CheckResult out{"G-graph moments of SO(4) rho1 are squared Catalans (paths + constant term)"};
    out.pass = true;
    FusionGraph graph =
        build_graph(GraphFamily::G, SubgroupName::D4_2, {1, 0}, 2 * max_n + 1);
    for (int n = 0; 2 * n <= 2 * max_n && out.pass; ++n) {
        BigInt want = squared_catalan(n);
        BigInt ct = moments_exact(GraphFamily::G, SubgroupName::D4_2, {2 * n, 0, 0, 0});
        BigInt paths = moments_paths(graph, 2 * n, 0);
        BigInt odd_ct =
            2 * n + 1 <= 2 * max_n
                ? moments_exact(GraphFamily::G, SubgroupName::D4_2, {2 * n + 1, 0, 0, 0})
                : BigInt(0);
        BigInt odd_paths = 2 * n + 1 <= 2 * max_n ? moments_paths(graph, 2 * n + 1, 0) : BigInt(0);
        if (ct != want || paths != want || odd_ct != 0 || odd_paths != 0) {
            out.pass = false;
            out.detail = "n=" + std::to_string(n) + " ct=" + ct.get_str() +
                         " paths=" + paths.get_str() + " want=" + want.get_str();
        }
    }
    out.seconds = timer.seconds();
    return out;
}

CheckResult check_walk_conjecture(int max_n) {
    Timer timer;
    CheckResult out{"quadrant walk counts and multinomial identity equal squared Catalans"};
    out.pass = true;
    for (int n = 0; n <= max_n && out.pass; ++n) {
        BigInt walks = count_walks_quadrant(n);
        auto [lhs, rhs] = multinomial_identity_sides(n);
        if (walks != squared_catalan(n) || lhs != rhs) {
            out.pass = false;
            out.detail = "n=" + std::to_string(n) + " walks=" + walks.get_str() +
                         " multinomial=" + rhs.get_str();
        }
    }
    out.seconds = timer.seconds();
    return out;
}

CheckResult check_mz_machinery(int order) {
    Timer timer;
    CheckResult out{"squared-Catalan generating function: series, recurrence, closed form"};
    out.pass = true;
    auto series = mz_series(order + 1);
    for (int n = 0; n <= order && out.pass; ++n) {
        if (series[n] != squared_catalan(n)) {
            out.pass = false;
            out.detail = "series coefficient " + std::to_string(n);
        }
    }
    if (out.pass && mz_ode_check(order + 1) != 0) {
        out.pass = false;
        out.detail = "nonzero recurrence residual";
    }
    double worst = 0.0;
    for (double z : {0.001, 0.01, 0.05}) {
        double closed = mz_closed_form(z);
        double series_val = 0.0, zn = 1.0;
        for (int n = 0; n <= 40; ++n) {
            series_val += squared_catalan(n).get_d() * zn;
            zn *= z;
        }
        worst = std::max(worst, std::abs(closed - series_val) / std::max(1.0, series_val));
    }
    if (worst > 1e-10) {
        out.pass = false;
        out.detail = "closed-form deviation " + fmt(worst);
    } else if (out.pass) {
        out.detail = "closed-form deviation " + fmt(worst);
    }
    out.seconds = timer.seconds();
    return out;
}

CheckResult check_orthogonality(uint64_t seed) {
    Timer timer;
    CheckResult out{"orbit-sum orthogonality: constant_term(F_a conj(F_b)) = delta |Gamma|"};
    out.pass = true;
    Rng rng(seed);
    for (SubgroupName name : kMeasureGroups) {
        const auto& g = subgroup(name);
        const BigInt order = g.order();
        auto random_strict = [&]() {
            for (;;) {
                Weight w{static_cast<int>(rng.next() % 19) - 9,
                         static_cast<int>(rng.next() % 19) - 9};
                if (name != SubgroupName::Z0) w = canonical_rep(g, w);
                if (is_strictly_dominant(g, w)) return w;
            }
        };
        for (int i = 0; i < 20 && out.pass; ++i) {
            Weight a = random_strict();
            Weight b = random_strict();
            for (OrbitKind kind : {OrbitKind::C, OrbitKind::S}) {
                BigInt got = orthogonality_check(name, a, b, kind);
                BigInt want = (a == b) ? order : BigInt(0);
                if (got != want) {
                    out.pass = false;
                    out.detail = std::string(subgroup_name_string(name)) + " " + a.to_string() +
                                 " " + b.to_string();
                }
            }
        }
    }
    out.seconds = timer.seconds();
    return out;
}

CheckResult check_jacobian_consistency(uint64_t seed, int points) {
    Timer timer;
    CheckResult out{"Jacobian forms: |J_theta| = |J_xy|, J^2 invariants, subgroup relations"};
    Rng rng(seed);
    double worst_abs = 0.0, worst_sq = 0.0, worst_rel = 0.0;
    for (SubgroupName g : kMeasureGroups) {
        for (int i = 0; i < points; ++i) {
            TorusPoint t = rng.torus_point();
            auto [x, y] = invariant_coords(g, t);
            Complex jt = jacobian_theta(g, t);
            double a = std::abs(jt);
            double b = std::abs(jacobian_xy(g, x, y));
            worst_abs = std::max(worst_abs, std::abs(a - b) / std::max(1.0, a));
            Complex sq = jacobian_sq_invariant(g, x, y);
            worst_sq =
                std::max(worst_sq, std::abs(jt * jt - sq) / std::max(1.0, std::abs(sq)));
        }
    }
    for (int i = 0; i < points; ++i) {
        worst_rel = std::max(worst_rel, relation_residuals(rng.torus_point()).max_residual());
    }
    out.pass = worst_abs < 1e-9 && worst_sq < 1e-8 && worst_rel < 1e-9;
    out.detail = "|J| " + fmt(worst_abs) + ", J^2 " + fmt(worst_sq) + ", relations " +
                 fmt(worst_rel);
    out.seconds = timer.seconds();
    return out;
}

CheckResult check_conjecture_identity(uint64_t seed, int points) {
    Timer timer;
    CheckResult out{"4 pi^2 |S_rho| = a |J| (SO(4) with the (1+y)^-1 weight)"};
    Rng rng(seed);
    double worst = 0.0;
    // The identity is asserted for the torus, the circle products, U(2),
    // SU(2)xSU(2) and SO(4); for PSU(3) |J| carries the extra cubic factor
    // |w1 + w2 + w1 w2|^3 and no constant works, so it is excluded here and
    // its measure-level form is verified with the conjectural densities.
    for (SubgroupName g : {SubgroupName::Z0, SubgroupName::Z2_2, SubgroupName::Z2_3,
                           SubgroupName::D4_1, SubgroupName::D4_2}) {
        for (int i = 0; i < points; ++i) {
            worst = std::max(worst, conjecture_identity_residual(g, rng.torus_point()));
        }
    }
    out.pass = worst < 1e-9;
    out.detail = "worst residual " + fmt(worst);
    out.seconds = timer.seconds();
    return out;
}

CheckResult check_measure_moments(int max_order) {
    Timer timer;
    CheckResult out{"non-conjectural densities reproduce the exact moments"};
    out.pass = true;
    double worst = 0.0;
    std::string worst_id;
    for (const auto& entry : catalog()) {
        if (entry.conjectural) continue;
        auto report = verify_measure(entry, max_order);
        if (report.max_rel_error > worst) {
            worst = report.max_rel_error;
            worst_id = entry.id;
        }
        if (!report.pass(1e-6)) out.pass = false;
    }
    out.detail = "worst " + fmt(worst) + " (" + worst_id + ")";
    out.seconds = timer.seconds();
    return out;
}

CheckResult check_conjectural_measures(int max_order) {
    Timer timer;
    CheckResult out{"conjectural PSU(3) G-densities match the first moments"};
    out.pass = true;
    double worst = 0.0;
    for (const auto& entry : catalog()) {
        if (!entry.conjectural) continue;
        auto report = verify_measure(entry, max_order);
        worst = std::max(worst, report.max_rel_error);
        if (!report.pass(1e-6)) out.pass = false;
    }
    out.detail = "worst " + fmt(worst) + " through order " + std::to_string(max_order);
    out.seconds = timer.seconds();
    return out;
}

CheckResult check_a_l_star_limits() {
    Timer timer;
    CheckResult out{"discrete star-graph measures: mass, limits, SO(4) path moments"};
    out.pass = true;
    for (int l : {3, 4, 5, 100, 101, 200, 201, 400, 401}) {
        double mass = a_l_star_discrete(l).total_mass();
        if (std::abs(mass - 1.0) > 1e-12) {
            out.pass = false;
            out.detail = "mass at level " + std::to_string(l);
        }
    }
    double worst_dev = 0.0;
    for (int l : {100, 200, 400}) {
        for (int m = 0; m <= 4; ++m) {
            double deviation = std::max(a_l_star_limit_check(l, m),
                                        a_l_star_limit_check(l + 1, m));
            worst_dev = std::max(worst_dev, deviation);
            if (deviation > 2.0 / l) {
                out.pass = false;
                out.detail = "limit deviation at level " + std::to_string(l);
            }
        }
    }
    // odd limiting moments = closed-walk counts on the SO(4) rho2 graph
    FusionGraph graph = build_graph(GraphFamily::G, SubgroupName::D4_2, {1, 1}, 9);
    for (int m = 0; m <= 8; ++m) {
        double nu = a_inf_star_moment(false, m);
        BigInt want = moments_paths(graph, m, 0);
        if (std::abs(nu - want.get_d()) > 1e-6 * std::max(1.0, want.get_d())) {
            out.pass = false;
            out.detail = "odd moment " + std::to_string(m) + " = " + std::to_string(nu) +
                         " want " + want.get_str();
        }
    }
    if (out.pass) out.detail = "worst limit deviation " + fmt(worst_dev);
    out.seconds = timer.seconds();
    return out;
}

CheckResult check_pushforward_marginal() {
    Timer timer;
    CheckResult out{"joint SU(2)xSU(2) density marginalises to the arcsine weight"};
    double worst = 0.0;
    const auto& joint = catalog_entry("joint-D4_1");
    for (int i = 1; i <= 20; ++i) {
        double x = -2.0 + 4.0 * i / 21.0;
        auto marginal = tanh_sinh(
            [&](double y) { return eval_joint_density(joint, x, y); }, -2.0, 2.0, 1e-12, 11);
        double want = 1.0 / (kPi * std::sqrt(4.0 - x * x));
        worst = std::max(worst, std::abs(marginal.value - want));
    }
    out.pass = worst < 1e-7;
    out.detail = "worst pointwise deviation " + fmt(worst);
    out.seconds = timer.seconds();
    return out;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    std::vector<CheckResult> results;
    results.push_back(check_central_binomial_moments(opts.moment_order));
    results.push_back(check_catalan_moments(opts.moment_order));
    results.push_back(check_squared_catalan_moments(opts.moment_order));
    results.push_back(check_walk_conjecture(opts.walk_order));
    results.push_back(check_mz_machinery(opts.walk_order));
    results.push_back(check_orthogonality(opts.seed));
    results.push_back(check_jacobian_consistency(opts.seed + 1, opts.random_points));
    results.push_back(check_conjecture_identity(opts.seed + 2, opts.random_points));
    if (opts.include_measures) {
        results.push_back(check_measure_moments(opts.measure_order));
        results.push_back(check_conjectural_measures(opts.conjectural_order));
    }
    results.push_back(check_a_l_star_limits());
    results.push_back(check_pushforward_marginal());
    return results;
}

}  // namespace gl2spec
