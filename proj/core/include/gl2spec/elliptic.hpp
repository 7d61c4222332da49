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

#ifndef GL2SPEC_ELLIPTIC_HPP
#define GL2SPEC_ELLIPTIC_HPP

namespace gl2spec {

// Complete and incomplete elliptic integrals in the PARAMETER convention:
//   K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt,   E, F, E(phi|m) likewise.
// m is the parameter (the square of the modulus k); negative m is supported
// through the imaginary-modulus transformation.

double complete_K(double m);  // m < 1; throws std::domain_error at m >= 1
double complete_E(double m);  // m <= 1

double carlson_RF(double x, double y, double z);
double carlson_RD(double x, double y, double z);

// Incomplete integrals for 0 <= phi <= pi/2; the integrand must stay real on
// [0, phi] (throws std::domain_error when m sin^2 phi > 1).
double incomplete_F(double phi, double m);
double incomplete_E(double phi, double m);

}  // namespace gl2spec

#endif  // GL2SPEC_ELLIPTIC_HPP
