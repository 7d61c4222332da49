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

#ifndef GL2SPEC_SEQUENCES_HPP
#define GL2SPEC_SEQUENCES_HPP

#include <utility>
#include <vector>

#include "gl2spec/laurent.hpp"

namespace gl2spec {

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt catalan(int n);
BigInt central_binomial(int n);  // C(2n, n)
BigInt squared_catalan(int n);

// Number of 2n-step walks on the closed quadrant N^2 that start and end at
// the origin with steps from {(-1,-1), (-1,1), (1,-1), (1,1)}.  Dense
// dynamic program over the reachable grid.
BigInt count_walks_quadrant(int n);

// Left side c_n^2 and the three-fold multinomial sum it equals.
std::pair<BigInt, BigInt> multinomial_identity_sides(int n);

// Coefficients of the squared-Catalan generating series M(z), n = 0..N-1.
std::vector<BigInt> mz_series(int N);

// Substitutes the truncated series into the hypergeometric ODE
//   z^2 (1-16z) M'' + z (3-32z) M' + (1-4z) M = 1
// and returns the largest absolute residual coefficient among powers
// 0..N-2 (identically zero for the true coefficients).
BigInt mz_ode_check(int N);

// Closed form M(z) = E(16z)/(pi z) - (1-16z) K(16z)/(2 pi z) - 1/(4z) for
// 0 < z < 1/16, with a series fallback below z = 1e-4 where the closed form
// loses digits to cancellation.
double mz_closed_form(double z);

}  // namespace gl2spec

#endif  // GL2SPEC_SEQUENCES_HPP
