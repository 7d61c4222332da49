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

#include "gl2spec/laurent.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>

namespace gl2spec {

namespace {
std::atomic<size_t> g_support_cap{1000000};
}

size_t LaurentPoly::support_cap() { return g_support_cap.load(); }
void LaurentPoly::set_support_cap(size_t cap) { g_support_cap.store(cap); }

void LaurentPoly::check_cap() const {
    if (terms_.size() > support_cap()) {
        throw std::length_error("Laurent polynomial support exceeded the cap of " +
                                std::to_string(support_cap()) + " terms");
    }
}

LaurentPoly LaurentPoly::monomial(Exponent e, BigInt coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace(e, std::move(coeff));
    return p;
}

void LaurentPoly::add_term(Exponent e, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    check_cap();
}

const BigInt& LaurentPoly::coeff(Exponent e) const {
    static const BigInt zero_coeff{0};
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_coeff : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) {
        BigInt neg = -c;
        out.add_term(e, neg);
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    // Convolution of supports; iterate the smaller factor outermost.
    const LaurentPoly& small = num_terms() <= o.num_terms() ? *this : o;
    const LaurentPoly& large = num_terms() <= o.num_terms() ? o : *this;
    LaurentPoly out;
    BigInt prod;
    for (const auto& [es, cs] : small.terms_) {
        for (const auto& [el, cl] : large.terms_) {
            Exponent e{es.e1 + el.e1, es.e2 + el.e2};
            prod = cs * cl;
            out.add_term(e, prod);
        }
    }
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [e, c] : terms_) {
        auto it = o.terms_.find(e);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly result = one();
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::conjugate() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{-e.e1, -e.e2}, c);
    return out;
}

BigInt LaurentPoly::constant_term() const { return coeff({0, 0}); }

std::complex<double> LaurentPoly::evaluate(TorusPoint t) const {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::complex<double> sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double phase = two_pi * (e.e1 * t.theta1 + e.e2 * t.theta2);
        sum += c.get_d() * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return sum;
}

std::complex<long double> LaurentPoly::evaluate_ld(TorusPoint t) const {
    constexpr long double two_pi = 6.283185307179586476925286766559L;
    std::complex<long double> sum = 0.0L;
    for (const auto& [e, c] : terms_) {
        long double phase = two_pi * (e.e1 * (long double)t.theta1 + e.e2 * (long double)t.theta2);
        sum += (long double)c.get_d() *
               std::complex<long double>(std::cos(phase), std::sin(phase));
    }
    return sum;
}

std::pair<Exponent, BigInt> LaurentPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    auto it = terms_.begin();
    Exponent best = it->first;
    for (++it; it != terms_.end(); ++it) {
        if (grlex_less(best, it->first)) best = it->first;
    }
    return {best, terms_.at(best)};
}

LaurentPoly LaurentPoly::exact_divide_by(const LaurentPoly& den) const {
    if (den.is_zero()) throw DivisionError("division by the zero polynomial");
    LaurentPoly quotient;
    LaurentPoly remainder = *this;
    const auto [lt_den_e, lt_den_c] = den.leading_term();

    // Repeatedly cancel the graded-lex leading term of the remainder against
    // the leading term of the divisor.  The leading term decreases strictly,
    // but in Laurent polynomials that alone does not force termination, so a
    // step budget turns runaway division into an inexactness error.
    const size_t max_steps = 16 * (num_terms() + den.num_terms()) + 4096;
    for (size_t step = 0; !remainder.is_zero(); ++step) {
        if (step > max_steps) {
            throw DivisionError("inexact division: no termination after " +
                                std::to_string(max_steps) + " cancellation steps, residual has " +
                                std::to_string(remainder.num_terms()) + " terms");
        }
        const auto [lt_r_e, lt_r_c] = remainder.leading_term();
        BigInt q, rest;
        mpz_tdiv_qr(q.get_mpz_t(), rest.get_mpz_t(), lt_r_c.get_mpz_t(), lt_den_c.get_mpz_t());
        if (rest != 0) {
            throw DivisionError("inexact division: leading coefficient " + lt_r_c.get_str() +
                                " at (" + std::to_string(lt_r_e.e1) + "," +
                                std::to_string(lt_r_e.e2) + ") is not divisible by " +
                                lt_den_c.get_str());
        }
        Exponent shift{lt_r_e.e1 - lt_den_e.e1, lt_r_e.e2 - lt_den_e.e2};
        quotient.add_term(shift, q);
        for (const auto& [e, c] : den.terms_) {
            BigInt delta = -(q * c);
            remainder.add_term({e.e1 + shift.e1, e.e2 + shift.e2}, delta);
        }
    }
    return quotient;
}

std::string LaurentPoly::serialize() const {
    std::vector<std::pair<Exponent, const BigInt*>> sorted;
    sorted.reserve(terms_.size());
    for (const auto& [e, c] : terms_) sorted.emplace_back(e, &c);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
    std::ostringstream os;
    for (const auto& [e, c] : sorted) {
        os << "(" << e.e1 << "," << e.e2 << "): " << c->get_str() << "\n";
    }
    if (sorted.empty()) os << "0\n";
    return os.str();
}

int LaurentPoly::max_abs_exponent() const {
    int m = 0;
    for (const auto& [e, c] : terms_) {
        m = std::max({m, std::abs(e.e1), std::abs(e.e2)});
    }
    return m;
}

}  // namespace gl2spec
