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

#ifndef GL2SPEC_QUADRATURE_HPP
#define GL2SPEC_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace gl2spec {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int nodes = 0;

    QuadratureResult& operator+=(const QuadratureResult& o) {
        value += o.value;
        error_estimate += o.error_estimate;
        nodes += o.nodes;
        return *this;
    }
};

// Tanh-sinh (double-exponential) rule over the open interval (a, b).
// Endpoints are never sampled, so integrable endpoint singularities are
// fine.  Levels are doubled until the estimate moves by less than tol
// (relative to the magnitude of the running value) or max_level is hit.
QuadratureResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                           double tol = 1e-12, int max_level = 12);

// Fixed-order Gauss-Legendre nodes/weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

QuadratureResult gauss_on(const std::function<double(double)>& f, double a, double b, int n);

// Trapezoid rule on the periodic interval [0, 1); spectrally accurate for
// smooth periodic integrands.
double periodic_trapezoid(const std::function<double(double)>& f, int n);

}  // namespace gl2spec

#endif  // GL2SPEC_QUADRATURE_HPP
