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

#ifndef GL2SPEC_DOMAINS_HPP
#define GL2SPEC_DOMAINS_HPP

#include <array>
#include <complex>

#include "gl2spec/groups.hpp"

namespace gl2spec {

// Membership in the joint spectrum D = Psi(T^2) with a tolerance band
// around the defining algebraic constraints.
bool domain_contains(SubgroupName group, std::complex<double> x, std::complex<double> y,
                     double tol = 1e-9);

namespace d61 {

// Defining surface of the PSU(3) joint spectrum:
//   Im(y)^2 = x^3 - Re(y)^2 - 4x Re(y) - x^2 - 2 Re(y) - x.
// surface_residual is the difference of the two sides.
double surface_residual(double x, double y1, double y2);

// Coefficients of the monic cubic in x obtained from the surface equation
// at fixed y = y1 + i y2:  x^3 - x^2 - (4 y1 + 1) x - (y1^2 + 2 y1 + y2^2).
std::array<double, 3> surface_cubic_coeffs(double y1, double y2);

// The three candidate solutions 6 x_j = 2 - 2^{2/3} eps_j P - 8 2^{1/3}
// conj(eps_j) (1+3y1) / P with principal branches; callers should validate
// each against the cubic residual before use.
std::array<std::complex<double>, 3> cubic_roots(double y1, double y2);

// Validated real solutions of the surface cubic, Newton-polished.  Inside
// D-prime all three sheets are real; on A and B exactly one is.
struct RealRoots {
    int count = 0;
    std::array<double, 3> x{};
};
RealRoots real_cubic_roots(double y1, double y2);

enum class Region { A, B, Dprime, Boundary, Outside };
Region classify_y(double y1, double y2, double tol = 1e-9);

// Outer boundary of the y-spectrum: |Im y| <= y_halfwidth(Re y) for
// Re y in [-2, 10].
double y_halfwidth(double y1);

// y1-limits of the (x, Re y) image at fixed x in [-1, 8].
double x_slice_lower(double x);
double x_slice_upper(double x);

// Real-y boundary roots: p_i solving the parametric cubic for the curves
// y = -2x - 1 +- (x+1)^{3/2} via x = 4 p + 4 p^2.  Each returned candidate
// has been validated by substitution; invalid slots are NaN.
std::array<double, 3> boundary_p_roots(double y);

}  // namespace d61

// Boundary curves of the SO(4) joint spectrum.
namespace d42 {
double c1_c2_y_of_x(double x);  // y = x^2/4 - 1 for x in [-4, 4]
double c3_y();                  // y = 3
double c1_x_of_y(double y);     // x = -2 sqrt(y+1)
double c2_x_of_y(double y);     // x = +2 sqrt(y+1)
}  // namespace d42

}  // namespace gl2spec

#endif  // GL2SPEC_DOMAINS_HPP
