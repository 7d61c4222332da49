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

#include "gl2spec/discrete_measures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gl2spec/densities.hpp"

namespace gl2spec {

namespace {
constexpr double kPi = std::numbers::pi;
}

double DiscreteMeasure::total_mass() const {
    double sum = 0.0;
    for (const auto& a : atoms) sum += a.weight;
    return sum;
}

double DiscreteMeasure::y_moment(int m) const {
    double sum = 0.0;
    for (const auto& a : atoms) {
        double y = 2.0 * std::cos(2.0 * kPi * a.angle) + 1.0;
        sum += a.weight * std::pow(y, m);
    }
    return sum;
}

DiscreteMeasure a_l_star_discrete(int l) {
    if (l < 3) throw std::invalid_argument("level must be at least 3");
    DiscreteMeasure out;
    out.atoms.reserve(l);
    const bool even = l % 2 == 0;
    for (int k = 0; k < l; ++k) {
        double angle = static_cast<double>(k) / l;
        double alpha = even ? 2.0 * std::pow(std::sin(2.0 * kPi * angle), 2)
                            : 1.0 - std::cos(2.0 * kPi * angle);
        out.atoms.push_back({angle, alpha / l});
    }
    return out;
}

double a_inf_star_moment(bool even, int m) {
    const DensityEntry& e = catalog_entry(even ? "a_inf_star_even" : "a_inf_star_odd");
    return quad_moment(e, m, 0).value.real();
}

double a_l_star_limit_check(int l, int m) {
    DiscreteMeasure mu = a_l_star_discrete(l);
    double discrete = mu.y_moment(m);
    double limit = a_inf_star_moment(l % 2 == 0, m);
    return std::abs(discrete - limit);
}

}  // namespace gl2spec
