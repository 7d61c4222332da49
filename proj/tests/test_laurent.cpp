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

#include <doctest.h>

#include <complex>

#include "gl2spec/laurent.hpp"
#include "test_support.hpp"

using namespace gl2spec;
using gl2spec::testing::make_poly;

TEST_CASE("multiplication examples") {
    auto cosx = make_poly({{{1, 0}, 1}, {{-1, 0}, 1}});  // w1 + w1^-1
    auto sq = cosx * cosx;
    CHECK(sq == make_poly({{{2, 0}, 1}, {{0, 0}, 2}, {{-2, 0}, 1}}));

    auto p = make_poly({{{1, 0}, 3}, {{0, 1}, -2}, {{2, -1}, 7}});
    CHECK(p * LaurentPoly::one() == p);

    auto a = make_poly({{{1, 0}, 1}, {{0, 1}, 1}});
    auto b = make_poly({{{-1, 0}, 1}, {{0, -1}, 1}});
    CHECK(a * b == make_poly({{{0, 0}, 2}, {{1, -1}, 1}, {{-1, 1}, 1}}));
}

TEST_CASE("ring axioms on random triples") {
    testing::Rng rng(0x1a02e701);
    for (int i = 0; i < 50; ++i) {
        auto p = rng.poly(6, 4, 9);
        auto q = rng.poly(6, 4, 9);
        auto r = rng.poly(6, 4, 9);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + q == q + p);
        CHECK((p - q) + q == p);
    }
}

TEST_CASE("conjugation") {
    auto p = make_poly({{{1, 0}, 1}, {{0, 1}, 1}});
    CHECK(p.conjugate() == make_poly({{{-1, 0}, 1}, {{0, -1}, 1}}));

    auto sym = make_poly({{{1, 0}, 2}, {{-1, 0}, 2}, {{0, 0}, 5}});
    CHECK(sym.conjugate() == sym);

    testing::Rng rng(0x1a02e702);
    for (int i = 0; i < 50; ++i) {
        auto q = rng.poly(8, 5, 9);
        CHECK(q.conjugate().conjugate() == q);
    }
}

TEST_CASE("constant term") {
    auto a = make_poly({{{1, 0}, 1}, {{0, 1}, 1}});
    auto prod = a * a.conjugate();
    CHECK(prod.constant_term() == 2);
    CHECK((prod * prod).constant_term() == 6);  // central binomial C(4,2)
    CHECK(LaurentPoly::monomial({3, -2}, 17).constant_term() == 0);
}

TEST_CASE("evaluation") {
    auto cosx = make_poly({{{1, 0}, 1}, {{-1, 0}, 1}});
    auto v = cosx.evaluate({0.0, 0.0});
    CHECK(std::abs(v - std::complex<double>(2.0, 0.0)) < 1e-15);

    auto w1 = LaurentPoly::monomial({1, 0}, 1);
    CHECK(std::abs(w1.evaluate({0.25, 0.0}) - std::complex<double>(0.0, 1.0)) < 1e-15);

    // Independent long-double summation oracle.
    testing::Rng rng(0x1a02e703);
    for (int i = 0; i < 30; ++i) {
        auto p = rng.poly(10, 6, 50);
        TorusPoint t = rng.torus_point();
        long double re = 0, im = 0;
        const long double two_pi = 6.283185307179586476925286L;
        for (const auto& [e, c] : p.terms()) {
            long double phase = two_pi * (e.e1 * (long double)t.theta1 + e.e2 * (long double)t.theta2);
            re += (long double)c.get_d() * cosl(phase);
            im += (long double)c.get_d() * sinl(phase);
        }
        auto v2 = p.evaluate(t);
        CHECK(std::abs(v2.real() - (double)re) < 1e-12);
        CHECK(std::abs(v2.imag() - (double)im) < 1e-12);
    }
}

TEST_CASE("evaluate is a ring homomorphism") {
    testing::Rng rng(0x1a02e704);
    for (int i = 0; i < 30; ++i) {
        auto p = rng.poly(8, 5, 9);
        auto q = rng.poly(8, 5, 9);
        TorusPoint t = rng.torus_point();
        auto lhs = (p * q).evaluate(t);
        auto rhs = p.evaluate(t) * q.evaluate(t);
        double scale = std::max(1.0, std::abs(rhs));
        CHECK(std::abs(lhs - rhs) / scale < 1e-10);
    }
}

TEST_CASE("exact division") {
    SUBCASE("telescoping quotient") {
        auto num = make_poly({{{2, 0}, 1}, {{-2, 0}, -1}});
        auto den = make_poly({{{1, 0}, 1}, {{-1, 0}, -1}});
        CHECK(num.exact_divide_by(den) == make_poly({{{1, 0}, 1}, {{-1, 0}, 1}}));
    }
    SUBCASE("round trip on random pairs") {
        testing::Rng rng(0x1a02e705);
        int done = 0;
        while (done < 50) {
            auto p = rng.poly(6, 4, 9);
            auto q = rng.poly(6, 4, 9);
            if (q.is_zero()) continue;
            ++done;
            CHECK((p * q).exact_divide_by(q) == p);
        }
    }
    SUBCASE("inexact division is reported") {
        auto num = make_poly({{{1, 0}, 1}, {{0, 1}, 1}});
        auto den = make_poly({{{1, 0}, 1}, {{0, 1}, -1}});
        CHECK_THROWS_AS(num.exact_divide_by(den), DivisionError);
    }
    SUBCASE("division by zero") {
        auto num = make_poly({{{1, 0}, 1}});
        CHECK_THROWS_AS(num.exact_divide_by(LaurentPoly::zero()), DivisionError);
    }
}

TEST_CASE("constant_term(p * conj(p)) is the coefficient power sum") {
    testing::Rng rng(0x1a02e706);
    for (int i = 0; i < 30; ++i) {
        auto p = rng.poly(8, 5, 20);
        BigInt expect = 0;
        for (const auto& [e, c] : p.terms()) expect += c * c;
        CHECK((p * p.conjugate()).constant_term() == expect);
        CHECK((p * p.conjugate()).constant_term() >= 0);
    }
}

TEST_CASE("support cap guard") {
    size_t old_cap = LaurentPoly::support_cap();
    LaurentPoly::set_support_cap(100);
    auto big = make_poly({{{1, 0}, 1}, {{0, 1}, 1}, {{-1, 0}, 1}, {{0, -1}, 1}});
    CHECK_THROWS_AS(big.pow(40), std::length_error);
    LaurentPoly::set_support_cap(old_cap);
}

TEST_CASE("serialization is sorted and stable") {
    auto p = make_poly({{{0, 0}, 2}, {{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1},
                        {{1, -1}, 1}, {{-1, 1}, 1}});
    CHECK(p.serialize() ==
          "(1,0): 1\n(0,1): 1\n(1,-1): 1\n(0,0): 2\n(-1,1): 1\n(0,-1): 1\n(-1,0): 1\n");
    CHECK(LaurentPoly::zero().serialize() == "0\n");
}
