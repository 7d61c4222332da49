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

#ifndef GL2SPEC_DISCRETE_MEASURES_HPP
#define GL2SPEC_DISCRETE_MEASURES_HPP

#include <vector>

namespace gl2spec {

// Measure supported on finitely many points of the unit circle.
struct DiscreteMeasure {
    struct Atom {
        double angle;   // in [0,1); the point is exp(2 pi i angle)
        double weight;  // >= 0
    };
    std::vector<Atom> atoms;
    double total_mass() const;

    // Moment of y = 2 cos(2 pi angle) + 1, the spectral variable of the
    // limiting graphs.
    double y_moment(int m) const;
};

// Spectral measure of the level-l star graph seen from the vertex of lowest
// Perron-Frobenius weight: atoms at the l-th roots of unity u with weight
// alpha(u)/l, where alpha(u) = 2 Im(u)^2 for even l and 1 - Re(u) for odd l.
DiscreteMeasure a_l_star_discrete(int l);

// |discrete m-th y-moment at level l  -  limiting-density moment|; the
// limiting density is the even/odd weight on [-1,3] matching the parity
// of l.
double a_l_star_limit_check(int l, int m);

// m-th moment of the limiting density (parity from l).
double a_inf_star_moment(bool even, int m);

}  // namespace gl2spec

#endif  // GL2SPEC_DISCRETE_MEASURES_HPP
