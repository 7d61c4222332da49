// pointwise oracle for the PSU(3) y-density (temporary)
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "gl2spec/densities.hpp"
#include "gl2spec/domains.hpp"
#include "gl2spec/jacobians.hpp"
#include "gl2spec/orbit_functions.hpp"

using namespace gl2spec;

static uint64_t state = 777;
static double rnd() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return (double)(z >> 11) * 0x1.0p-53;
}

// all torus preimages of y = y1 + i y2 under chi_rho2, by Newton from a grid
static std::vector<TorusPoint> preimages(double y1, double y2) {
    const LaurentPoly& chi = character(SubgroupName::D6_1, {1, 1}).poly;
    auto F = [&](TorusPoint t) {
        auto v = chi.evaluate(t);
        return std::pair{v.real() - y1, v.imag() - y2};
    };
    std::vector<TorusPoint> found;
    const int grid = 60;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            TorusPoint t{(i + 0.5) / grid, (j + 0.5) / grid};
            bool ok = true;
            for (int it = 0; it < 60; ++it) {
                auto [f1, f2] = F(t);
                if (std::abs(f1) + std::abs(f2) < 1e-13) break;
                // numerical Jacobian
                const double h = 1e-7;
                auto [a1, a2] = F({t.theta1 + h, t.theta2});
                auto [b1, b2] = F({t.theta1, t.theta2 + h});
                double j11 = (a1 - f1) / h, j12 = (b1 - f1) / h;
                double j21 = (a2 - f2) / h, j22 = (b2 - f2) / h;
                double det = j11 * j22 - j12 * j21;
                if (std::abs(det) < 1e-12) { ok = false; break; }
                t.theta1 -= (j22 * f1 - j12 * f2) / det;
                t.theta2 -= (-j21 * f1 + j11 * f2) / det;
                t.theta1 -= std::floor(t.theta1);
                t.theta2 -= std::floor(t.theta2);
            }
            auto [f1, f2] = F(t);
            if (!ok || std::abs(f1) + std::abs(f2) > 1e-10) continue;
            bool dup = false;
            for (auto& p : found) {
                double d1 = std::abs(p.theta1 - t.theta1);
                double d2 = std::abs(p.theta2 - t.theta2);
                d1 = std::min(d1, 1.0 - d1);
                d2 = std::min(d2, 1.0 - d2);
                if (d1 + d2 < 1e-6) dup = true;
            }
            if (!dup) found.push_back(t);
        }
    }
    return found;
}

int main() {
    const auto& entry = catalog_entry("d6_1-h-rho2");
    int checked = 0;
    double worst = 0;
    while (checked < 40) {
        TorusPoint t{rnd(), rnd()};
        auto [xc, yc] = invariant_coords(SubgroupName::D6_1, t);
        double y1 = yc.real(), y2 = yc.imag();
        auto region = d61::classify_y(y1, y2);
        auto pre = preimages(y1, y2);
        if (pre.empty()) continue;
        double oracle = 0;
        for (auto& p : pre) {
            double j = std::abs(d61_jacobian_y_theta(p).real());
            oracle += 1.0 / j;
        }
        double mine = eval_density(entry, y1, y2);
        double rel = std::abs(mine - oracle) / oracle;
        const char* rn = region == d61::Region::A  ? "A "
                         : region == d61::Region::B ? "B "
                         : region == d61::Region::Dprime ? "D'" : "??";
        if (rel > 1e-9 || checked < 8) {
            printf("%s y=(%.4f,%.4f) preimages=%zu oracle=%.12g mine=%.12g rel=%.2e\n", rn, y1,
                   y2, pre.size(), oracle, mine, rel);
        }
        worst = std::max(worst, rel);
        ++checked;
    }
    printf("worst pointwise rel = %.3e\n", worst);
    return 0;
}
