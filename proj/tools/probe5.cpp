// region-quadrature convergence probe (temporary)
#include <chrono>
#include <cmath>
#include <cstdio>

#include "gl2spec/densities.hpp"
#include "gl2spec/domains.hpp"
#include "gl2spec/quadrature.hpp"

using namespace gl2spec;

// duplicate of the banded tensor pass with adjustable levels
static double region_mass(const DensityEntry& e, int inner_level, int outer_level, int* nodes,
                          int mom = 0) {
    auto inner_cuts = [&](double y1) {
        std::vector<double> cuts{0.0};
        double half = d61::y_halfwidth(y1);
        if (y1 >= -1.0 / 3.0) {
            double base = -11.0 - 90.0 * y1 - 27.0 * y1 * y1;
            double cube = 16.0 * std::pow(std::max(0.0, 1.0 + 3.0 * y1), 1.5);
            for (double s : {base - cube, base + cube}) {
                if (s > 0.0) {
                    double c = std::sqrt(s / 27.0);
                    if (c < half) cuts.push_back(c);
                }
            }
        }
        cuts.push_back(half);
        std::sort(cuts.begin(), cuts.end());
        return cuts;
    };
    struct Node { double x, w; };
    auto ts_nodes = [](int level) {
        std::vector<Node> nodes;
        double h = std::pow(0.5, level);
        for (double t = -6.0; t <= 6.0; t += h) {
            double s = std::sinh(t), c = std::cosh(t);
            double u = 0.5 * std::numbers::pi * s;
            double x = std::tanh(u);
            double sech = 1.0 / std::cosh(u);
            if (1.0 - std::abs(x) < 1e-15) continue;
            nodes.push_back({0.5 * (x + 1.0), 0.25 * std::numbers::pi * c * sech * sech * h});
        }
        return nodes;
    };
    const auto in_nodes = ts_nodes(inner_level);
    const auto out_nodes = ts_nodes(outer_level);
    const double y1_cuts[] = {-2.0, -1.0 / 3.0, -5.0 / 27.0, 1.0, 10.0};
    double total = 0;
    *nodes = 0;
    for (int seg = 0; seg < 4; ++seg) {
        double a = y1_cuts[seg], b = y1_cuts[seg + 1];
        for (const auto& on : out_nodes) {
            double y1 = a + (b - a) * on.x;
            double wy1 = (b - a) * on.w;
            auto cuts = inner_cuts(y1);
            for (size_t ci = 0; ci + 1 < cuts.size(); ++ci) {
                double lo = cuts[ci], hi = cuts[ci + 1];
                if (hi - lo < 1e-14) continue;
                for (const auto& in : in_nodes) {
                    double y2 = lo + (hi - lo) * in.x;
                    double w = eval_density(e, y1, y2);
                    if (!std::isfinite(w)) continue;
                    ++*nodes;
                    total += 2.0 * wy1 * (hi - lo) * in.w * w * std::pow(y1, mom);
                }
            }
        }
    }
    return total;
}

int main() {
    const auto& e = catalog_entry("d6_1-h-rho2");
    const double cuts[] = {-2.0, -1.0/3.0, -5.0/27.0, 1.0, 10.0};
    // reuse region_mass but restricted per segment: hack via lambda copy
    for (int lv = 6; lv <= 10; ++lv) {
        printf("level %2d:", lv);
        double tot = 0;
        for (int seg = 0; seg < 4; ++seg) {
            // copy of region_mass restricted to one segment
            auto inner_cuts = [&](double y1) {
                std::vector<double> c{0.0};
                double half = d61::y_halfwidth(y1);
                if (y1 >= -1.0 / 3.0) {
                    double base = -11.0 - 90.0 * y1 - 27.0 * y1 * y1;
                    double cube = 16.0 * std::pow(std::max(0.0, 1.0 + 3.0 * y1), 1.5);
                    for (double sv : {base - cube, base + cube}) {
                        if (sv > 0.0) {
                            double cc = std::sqrt(sv / 27.0);
                            if (cc < half) c.push_back(cc);
                        }
                    }
                }
                c.push_back(half);
                std::sort(c.begin(), c.end());
                return c;
            };
            struct Node { double x, w; };
            auto ts_nodes = [](int level) {
                std::vector<Node> nodes;
                double h = std::pow(0.5, level);
                for (double t = -6.0; t <= 6.0; t += h) {
                    double sh = std::sinh(t), ch = std::cosh(t);
                    double u = 0.5 * std::numbers::pi * sh;
                    double x = std::tanh(u);
                    double sech = 1.0 / std::cosh(u);
                    if (1.0 - std::abs(x) < 1e-15) continue;
                    nodes.push_back({0.5 * (x + 1.0), 0.25 * std::numbers::pi * ch * sech * sech * h});
                }
                return nodes;
            };
            const auto in_nodes = ts_nodes(lv);
            const auto out_nodes = ts_nodes(lv);
            double a = cuts[seg], b = cuts[seg + 1];
            double total = 0;
            for (const auto& on : out_nodes) {
                double y1 = a + (b - a) * on.x;
                double wy1 = (b - a) * on.w;
                auto bc = inner_cuts(y1);
                for (size_t ci = 0; ci + 1 < bc.size(); ++ci) {
                    double lo = bc[ci], hi = bc[ci + 1];
                    if (hi - lo < 1e-14) continue;
                    for (const auto& in : in_nodes) {
                        double y2 = lo + (hi - lo) * in.x;
                        double w = eval_density(e, y1, y2);
                        if (!std::isfinite(w)) continue;
                        total += 2.0 * wy1 * (hi - lo) * in.w * w;
                    }
                }
            }
            printf("  s%d %.9f", seg, total);
            tot += total;
        }
        printf("   total-1 = %+.3e\n", tot - 1.0);
    }
    return 0;
}