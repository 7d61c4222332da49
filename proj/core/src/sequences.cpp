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

#include "gl2spec/sequences.hpp"

#include <numbers>
#include <stdexcept>

#include "gl2spec/elliptic.hpp"

namespace gl2spec {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

BigInt catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan index must be non-negative");
    return binomial(2 * n, n) / (n + 1);
}

BigInt central_binomial(int n) {
    if (n < 0) throw std::invalid_argument("central binomial index must be non-negative");
    return binomial(2 * n, n);
}

BigInt squared_catalan(int n) {
    BigInt c = catalan(n);
    return c * c;
}

BigInt count_walks_quadrant(int n) {
    if (n < 0) throw std::invalid_argument("walk length must be non-negative");
    const int size = 2 * n + 1;
    std::vector<std::vector<BigInt>> cur(size, std::vector<BigInt>(size, BigInt(0)));
    cur[0][0] = 1;
    for (int step = 0; step < 2 * n; ++step) {
        std::vector<std::vector<BigInt>> next(size, std::vector<BigInt>(size, BigInt(0)));
        for (int i = 0; i < size; ++i) {
            for (int j = 0; j < size; ++j) {
                if (cur[i][j] == 0) continue;
                for (int di : {-1, 1}) {
                    for (int dj : {-1, 1}) {
                        int ni = i + di, nj = j + dj;
                        if (ni < 0 || nj < 0 || ni >= size || nj >= size) continue;
                        next[ni][nj] += cur[i][j];
                    }
                }
            }
        }
        cur = std::move(next);
    }
    return cur[0][0];
}

namespace {

BigInt multinomial4(int m1, int m2, int m3, int m4) {
    return factorial(m1 + m2 + m3 + m4) /
           (factorial(m1) * factorial(m2) * factorial(m3) * factorial(m4));
}

}  // namespace

std::pair<BigInt, BigInt> multinomial_identity_sides(int n) {
    if (n < 0) throw std::invalid_argument("index must be non-negative");
    BigInt right = 0;
    for (int k = 0; k <= n; ++k) right += multinomial4(k, k, n - k, n - k);
    for (int k = 0; k <= n - 1; ++k) right += multinomial4(k, k + 2, n - k - 1, n - k - 1);
    for (int k = 0; k <= n - 1; ++k) right -= 2 * multinomial4(k, k + 1, n - k - 1, n - k);
    return {squared_catalan(n), right};
}

std::vector<BigInt> mz_series(int N) {
    if (N < 1) throw std::invalid_argument("series length must be at least 1");
    std::vector<BigInt> coeffs(N);
    for (int n = 0; n < N; ++n) coeffs[n] = squared_catalan(n);
    return coeffs;
}

BigInt mz_ode_check(int N) {
    auto a = mz_series(N);
    // Coefficient of z^n in z^2(1-16z) M'' + z(3-32z) M' + (1-4z) M - 1:
    //   (n+1)^2 a_n - 4 (2n-1)^2 a_{n-1}    (n >= 1),   a_0 - 1  (n = 0).
    BigInt worst = 0;
    for (int n = 0; n <= N - 2; ++n) {
        BigInt res;
        if (n == 0) {
            res = a[0] - 1;
        } else {
            res = BigInt((n + 1)) * (n + 1) * a[n] -
                  BigInt(4) * (2 * n - 1) * (2 * n - 1) * a[n - 1];
        }
        if (abs(res) > worst) worst = abs(res);
    }
    return worst;
}

double mz_closed_form(double z) {
    if (!(z > 0.0 && z < 1.0 / 16.0)) {
        throw std::domain_error("mz_closed_form requires 0 < z < 1/16");
    }
    if (z < 1e-4) {
        // Removable singularity at z = 0: sum the series instead.
        double sum = 0.0, zn = 1.0;
        for (int n = 0; n <= 40; ++n) {
            sum += squared_catalan(n).get_d() * zn;
            zn *= z;
        }
        return sum;
    }
    const double pi = std::numbers::pi;
    const double m = 16.0 * z;
    return complete_E(m) / (pi * z) - (1.0 - m) * complete_K(m) / (2.0 * pi * z) -
           1.0 / (4.0 * z);
}

}  // namespace gl2spec
