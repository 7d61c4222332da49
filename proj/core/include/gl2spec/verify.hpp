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

#ifndef GL2SPEC_VERIFY_HPP
#define GL2SPEC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gl2spec {

struct CheckResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;  // worst residual / failing item
};

struct VerifyOptions {
    uint64_t seed = 20260808;
    int moment_order = 10;        // exact-moment checks (criteria 1-3)
    int walk_order = 12;          // walk/multinomial checks
    int measure_order = 8;        // quadrature-vs-oracle order
    int conjectural_order = 10;   // conjectural-entry order
    int random_points = 1000;     // Jacobian identity sample counts
    bool include_measures = true; // the quadrature suite is the slow part
};

// The full verification suite; every check prints nothing and returns its
// result.  Names are stable identifiers used by the CLI and the tests.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

CheckResult check_central_binomial_moments(int max_m);
CheckResult check_catalan_moments(int max_m);
CheckResult check_squared_catalan_moments(int max_n);
CheckResult check_walk_conjecture(int max_n);
CheckResult check_mz_machinery(int order);
CheckResult check_orthogonality(uint64_t seed);
CheckResult check_jacobian_consistency(uint64_t seed, int points);
CheckResult check_conjecture_identity(uint64_t seed, int points);
CheckResult check_measure_moments(int max_order);
CheckResult check_conjectural_measures(int max_order);
CheckResult check_a_l_star_limits();
CheckResult check_pushforward_marginal();

}  // namespace gl2spec

#endif  // GL2SPEC_VERIFY_HPP
