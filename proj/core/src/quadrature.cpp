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

#include "gl2spec/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace gl2spec {

namespace {
constexpr double kPiHalf = std::numbers::pi / 2.0;

// Abscissa/weight of the tanh-sinh substitution x = tanh(pi/2 sinh(t)).
struct TsNode {
    double x;  // in (-1, 1)
    double w;
};

TsNode ts_node(double t) {
    double s = std::sinh(t);
    double c = std::cosh(t);
    double u = kPiHalf * s;
    double x = std::tanh(u);
    double sech = 1.0 / std::cosh(u);
    return {x, kPiHalf * c * sech * sech};
}
}  // namespace

QuadratureResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                           double tol, int max_level) {
    if (!(b > a)) return {0.0, 0.0, 0};
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    const double t_max = 6.5;  // x is within ~1e-280 of the endpoint there

    auto eval = [&](double t) -> double {
        TsNode n = ts_node(t);
        double x = mid + half * n.x;
        if (x <= a || x >= b) return 0.0;  // underflow guard next to the ends
        double v = f(x);
        if (!std::isfinite(v)) return 0.0;  // integrable singular values
        return v * n.w;
    };

    double h = 1.0;
    double sum = eval(0.0);
    int nodes = 1;
    for (double t = h; t <= t_max; t += h) {
        sum += eval(t) + eval(-t);
        nodes += 2;
    }
    double previous = sum * h * half;

    QuadratureResult out;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        // add the odd multiples of the new h
        for (double t = h; t <= t_max; t += 2.0 * h) {
            sum += eval(t) + eval(-t);
            nodes += 2;
        }
        double current = sum * h * half;
        double change = std::abs(current - previous);
        double scale = std::max(std::abs(current), 1e-300);
        previous = current;
        if (level >= 3 && change < tol * std::max(1.0, scale)) {
            out = {current, change, nodes};
            return out;
        }
    }
    out = {previous, std::abs(previous) * 1e-8, nodes};
    return out;
}

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Newton iteration on the Legendre polynomial P_n.
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

QuadratureResult gauss_on(const std::function<double(double)>& f, double a, double b, int n) {
    const GaussRule& rule = gauss_legendre(n);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return {sum * half, std::abs(sum) * half * 1e-13, n};
}

double periodic_trapezoid(const std::function<double(double)>& f, int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += f(static_cast<double>(i) / n);
    return sum / n;
}

}  // namespace gl2spec
