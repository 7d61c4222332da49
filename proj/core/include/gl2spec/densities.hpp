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

#ifndef GL2SPEC_DENSITIES_HPP
#define GL2SPEC_DENSITIES_HPP

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gl2spec/quadrature.hpp"
#include "gl2spec/rep_graphs.hpp"

namespace gl2spec {

// Closed-form spectral weights appearing in the catalog.
enum class WeightId {
    UniformCircle,   // (2 pi)^-1 on the unit circle (angle measure)
    Arcsine,         // (pi sqrt(4-u^2))^-1 on [-2, 2]
    Semicircle,      // sqrt(4-u^2) / (2 pi) on [-2, 2]
    ArcsineShifted,  // (pi sqrt((u+1)(3-u)))^-1 on [-1, 3]
    DiscArcsine,     // (pi^2 sqrt(4-|z|^2))^-1 on the radius-2 disc
    DiscSemicircle,  // sqrt(4-|z|^2) / (2 pi^2) on the radius-2 disc
    So4HX,           // K((16-x^2)/16) / (8 pi^2) on [-4, 4]
    So4GX,           // ((16+x^2) K(u) - 32 E(u)) / (8 pi^2), u = 1 - x^2/16
    AInfOdd,         // sqrt(3-y) / (2 pi sqrt(y+1)) on [-1, 3]
    AInfEven,        // sqrt((3-y)(y+1)) / (2 pi) on [-1, 3]
    Psu3HX,          // piecewise complete-K weight on [-1, 8]
    Psu3HY,          // region-dispatched sum of 1/|J_y| over the cubic sheets
    Psu3GX,          // piecewise complete-E/K weight on [-1, 8]
    Psu3GY,          // region-dispatched sum of |S|^2/|J_y| over the sheets
    JointInvJacobian // |Gamma| / |J(x,y)| on the joint spectrum
};

enum class SupportKind {
    Interval,     // subset of the real line
    Circle,       // unit circle
    Disc,         // radius-2 disc in C
    PlaneRegion,  // the PSU(3) y-spectrum in C
    Joint         // two-dimensional joint spectrum
};

struct DensityEntry {
    std::string id;
    SubgroupName group;
    int generator = 1;  // 1 or 2; 0 for joint entries
    GraphFamily family = GraphFamily::H;
    WeightId weight;
    SupportKind support;
    double a = 0.0, b = 0.0;  // interval endpoints when applicable
    bool conjectural = false;
    std::string description;
};

// All closed-form spectral densities: one entry per (group, generator,
// family), the joint |Gamma|/|J| densities, and the two limiting discrete-
// family densities.
const std::vector<DensityEntry>& catalog();
const DensityEntry& catalog_entry(const std::string& id);

// Point evaluation.  Integrable singularities evaluate to +infinity.
double eval_density(const DensityEntry& entry, double x);
double eval_density(const DensityEntry& entry, double u, double v);  // planar supports
double eval_joint_density(const DensityEntry& entry, std::complex<double> x,
                          std::complex<double> y);

struct MomentResult {
    std::complex<double> value;
    double error_estimate = 0.0;
    int nodes = 0;
};

// Moment int z^m conj(z)^n d(nu) over the support; for joint entries the
// four-tuple overload integrates x^m1 conj(x)^n1 y^m2 conj(y)^n2.
MomentResult quad_moment(const DensityEntry& entry, int m, int n);
MomentResult quad_joint_moment(const DensityEntry& entry, std::array<int, 4> powers);

// Exact integer oracle for the same moment (path/constant-term machinery).
BigInt oracle_moment(const DensityEntry& entry, int m, int n);
BigInt oracle_joint_moment(const DensityEntry& entry, std::array<int, 4> powers);

struct MomentComparison {
    std::array<int, 4> powers{};
    std::complex<double> quadrature;
    double oracle;
    double rel_error;
};

struct VerifyReport {
    std::string id;
    bool conjectural = false;
    int max_order = 0;
    double max_rel_error = 0.0;
    double mass_error = 0.0;
    std::vector<MomentComparison> worst;  // a few worst offenders
    bool pass(double tol) const { return max_rel_error <= tol; }
};

// Compares quadrature moments against the exact oracles for every moment of
// total order <= max_order.
VerifyReport verify_measure(const DensityEntry& entry, int max_order);

}  // namespace gl2spec

#endif  // GL2SPEC_DENSITIES_HPP
