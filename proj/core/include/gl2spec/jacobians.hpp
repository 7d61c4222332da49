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

#ifndef GL2SPEC_JACOBIANS_HPP
#define GL2SPEC_JACOBIANS_HPP

#include <complex>
#include <string>
#include <vector>

#include "gl2spec/laurent.hpp"
#include "gl2spec/orbit_functions.hpp"

namespace gl2spec {

using Complex = std::complex<double>;

// Invariant coordinates (x, y) = (chi_rho1, chi_rho2) at a torus point.
std::pair<Complex, Complex> invariant_coords(SubgroupName group, TorusPoint t);

// det d(x,y)/d(theta1,theta2), computed from term-wise exact differentiation
// of the character polynomials (a monomial picks up 2 pi i times its
// exponent).  The result is exact up to floating evaluation.
Complex jacobian_theta(SubgroupName group, TorusPoint t);

// The closed form of the same Jacobian in the invariant coordinates, with
// principal square-root branches.  Phases of the complex-valued forms are a
// branch convention; only |jacobian_xy| and its square are meaningful.
// Throws std::domain_error when (x, y) lies outside the joint spectrum.
Complex jacobian_xy(SubgroupName group, Complex x, Complex y);

// J^2 expressed as a polynomial in the invariant coordinates.
Complex jacobian_sq_invariant(SubgroupName group, Complex x, Complex y);

// | 4 pi^2 |S_varrho(t)| - w |J(t)| | with w = a_Gamma, except the SO(4)
// variant w = (1+y)^{-1}.
double conjecture_identity_residual(SubgroupName group, TorusPoint t);

// Residuals of the structural Jacobian identities at a torus point:
//  - J_{D4_1} = 2 Re(J_{Z2_2})  under y1 = y2, x2 = 2 Re(x1);
//  - J_{D12}  = 2 Re(J_{D6_1})  under the G2-variable map x' = x-1,
//    y' = 2 Re(y) - x + 2;
//  - (2 Re J_{Z2_3})^2 = 16 pi^4 * P(x2, y2, z2) with the boundary cubic P
//    and the auxiliary invariant z2 = w1 w2^-1 + w1^-1 w2.
struct RelationResiduals {
    double d4_1_from_z2_2 = 0.0;
    double d12_from_d6_1 = 0.0;
    double z2_3_boundary_poly = 0.0;
    double max_residual() const;
};

RelationResiduals relation_residuals(TorusPoint t);

// Jacobian of the 12-to-1 change of variables (theta1,theta2) -> (x, Re y)
// for PSU(3), in both forms.
Complex d61_jacobian_x_rey_theta(TorusPoint t);
double d61_jacobian_x_rey(double x, double y1);  // |J| as sqrt of a product

// Jacobian of (theta1,theta2) -> (Re y, Im y) for PSU(3): the theta form and
// the invariant form 2 sqrt(2) pi^2 sqrt(b(x, y1, y2)).
Complex d61_jacobian_y_theta(TorusPoint t);
double d61_jacobian_y(double x, double y1, double y2);

}  // namespace gl2spec

#endif  // GL2SPEC_JACOBIANS_HPP
