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

#ifndef GL2SPEC_LAURENT_HPP
#define GL2SPEC_LAURENT_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gl2spec/groups.hpp"

namespace gl2spec {

using BigInt = mpz_class;

// Point on the two-torus in angle coordinates, theta_j in [0,1),
// omega_j = exp(2 pi i theta_j).
struct TorusPoint {
    double theta1 = 0.0, theta2 = 0.0;
};

// Monomial exponent (e1,e2), i.e. omega_1^e1 omega_2^e2.
struct Exponent {
    int e1 = 0, e2 = 0;
    constexpr bool operator==(const Exponent&) const = default;
};

// Graded-lexicographic order on (e1+e2, e1).  Compatible with exponent
// addition, so leading terms multiply.
constexpr bool grlex_less(Exponent a, Exponent b) {
    const long ga = static_cast<long>(a.e1) + a.e2;
    const long gb = static_cast<long>(b.e1) + b.e2;
    if (ga != gb) return ga < gb;
    return a.e1 < b.e1;
}

struct ExponentHash {
    size_t operator()(Exponent e) const {
        uint64_t k = (static_cast<uint64_t>(static_cast<uint32_t>(e.e1)) << 32) |
                     static_cast<uint32_t>(e.e2);
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        return static_cast<size_t>(k);
    }
};

class DivisionError : public std::runtime_error {
  public:
    explicit DivisionError(const std::string& what) : std::runtime_error(what) {}
};

// Finitely supported Laurent polynomial in two torus variables with exact
// integer coefficients.  Stored coefficients are never zero.
class LaurentPoly {
  public:
    using TermMap = std::unordered_map<Exponent, BigInt, ExponentHash>;

    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial({0, 0}, 1); }
    static LaurentPoly monomial(Exponent e, BigInt coeff);

    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(Exponent e, const BigInt& coeff);  // accumulate, dropping zeros
    const BigInt& coeff(Exponent e) const;           // 0 if absent

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const;

    LaurentPoly scaled(const BigInt& c) const;
    LaurentPoly pow(unsigned n) const;

    // Exponent negation; models omega -> conj(omega) on the torus.
    LaurentPoly conjugate() const;

    BigInt constant_term() const;

    std::complex<double> evaluate(TorusPoint t) const;
    std::complex<long double> evaluate_ld(TorusPoint t) const;

    // Leading term in graded-lex order.  Undefined on the zero polynomial.
    std::pair<Exponent, BigInt> leading_term() const;

    // Exact quotient: returns q with q*den == *this.  Throws DivisionError
    // when the division is inexact (reporting the residual support) or when
    // den is zero.
    LaurentPoly exact_divide_by(const LaurentPoly& den) const;

    // Sorted "(e1,e2): coeff" lines, one per term, graded-lex descending.
    std::string serialize() const;

    int max_abs_exponent() const;  // max over terms of max(|e1|,|e2|)

    // Support guard: operations producing more than this many terms throw.
    static size_t support_cap();
    static void set_support_cap(size_t cap);

  private:
    void check_cap() const;
    TermMap terms_;
};

inline LaurentPoly conjugate(const LaurentPoly& p) { return p.conjugate(); }
inline BigInt constant_term(const LaurentPoly& p) { return p.constant_term(); }
inline LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
inline LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
    return num.exact_divide_by(den);
}
inline std::complex<double> evaluate(const LaurentPoly& p, TorusPoint t) {
    return p.evaluate(t);
}

}  // namespace gl2spec

#endif  // GL2SPEC_LAURENT_HPP
