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

#ifndef GL2SPEC_TEST_SUPPORT_HPP
#define GL2SPEC_TEST_SUPPORT_HPP

#include <cstdint>
#include <initializer_list>

#include "gl2spec/laurent.hpp"

namespace gl2spec::testing {

// Deterministic splitmix64 stream; identical across platforms.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    TorusPoint torus_point() { return {uniform(), uniform()}; }

    LaurentPoly poly(int max_terms, int max_exp, int max_coeff) {
        LaurentPoly p;
        int n = uniform_int(1, max_terms);
        for (int i = 0; i < n; ++i) {
            int c = uniform_int(-max_coeff, max_coeff);
            p.add_term({uniform_int(-max_exp, max_exp), uniform_int(-max_exp, max_exp)}, c);
        }
        return p;
    }

  private:
    uint64_t state_;
};

inline LaurentPoly make_poly(
    std::initializer_list<std::pair<std::pair<int, int>, long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term({e.first, e.second}, c);
    return p;
}

}  // namespace gl2spec::testing

#endif  // GL2SPEC_TEST_SUPPORT_HPP
