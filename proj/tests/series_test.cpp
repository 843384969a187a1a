/*
   Copyright 2026 The necklace authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "necklace/error.hpp"
#include "necklace/series.hpp"
#include "oracles.hpp"

using namespace necklace;

namespace {

TruncatedSeries S(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return TruncatedSeries(std::move(v));
}

ExponentSpec E(std::vector<long> e) {
    std::vector<Integer> v;
    for (long x : e) v.emplace_back(x);
    return ExponentSpec(std::move(v));
}

ExponentSpec random_spec(std::mt19937_64& rng, std::uint64_t D, long bound) {
    std::uniform_int_distribution<long> pick(-bound, bound);
    std::vector<long> e(D);
    for (auto& x : e) x = pick(rng);
    return E(e);
}

}  // namespace

TEST_CASE("series_mul") {
    CHECK(series_mul(S({1, 1, 0}), S({1, -1, 0})) == S({1, 0, -1}));
    CHECK(series_mul(S({1, -1, 0, 0}), S({1, 0, -1, 0})) == S({1, -1, -1, 1}));
    CHECK(series_mul(S({1, -2, 0}), S({1, 2, 4})) == S({1, 0, 0}));
    try {
        series_mul(S({1, 2}), S({1, 2, 3}));
        FAIL("expected a degree mismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::degree_mismatch);
    }
}

TEST_CASE("binomial_factor") {
    CHECK(binomial_factor(1, 2, 3) == S({1, -2, 1, 0}));
    CHECK(binomial_factor(2, 1, 5) == S({1, 0, -1, 0, 0, 0}));
    CHECK(binomial_factor(1, -1, 4) == S({1, 1, 1, 1, 1}));
    CHECK(series_mul(binomial_factor(1, -1, 4), S({1, -1, 0, 0, 0})) == TruncatedSeries::one(4));
    // (1 - z^2)^-2 = sum (j + 1) z^(2j)
    CHECK(binomial_factor(2, -2, 6) == S({1, 0, 2, 0, 3, 0, 4}));
    CHECK(binomial_factor(3, 0, 4) == TruncatedSeries::one(4));
    CHECK_THROWS_AS(binomial_factor(0, 1, 4), Error);
    CHECK_THROWS_AS(binomial_factor(5, 1, 4), Error);
}

TEST_CASE("binomial_factor: e and -e are inverse to each other") {
    for (long e = -6; e <= 6; ++e)
        for (std::uint64_t n = 1; n <= 5; ++n)
            CHECK(series_mul(binomial_factor(n, e, 12), binomial_factor(n, -e, 12)) == TruncatedSeries::one(12));
}

TEST_CASE("binomial_factor: huge exponent") {
    // (1 - z)^(10^30): z^2 coefficient is C(10^30, 2)
    Integer e("1000000000000000000000000000000");
    auto s = binomial_factor(1, e, 2);
    CHECK(s[1] == -e);
    CHECK(s[2] == e * (e - 1) / 2);
}

TEST_CASE("expand_direct") {
    CHECK(expand_direct(E({0, 0, 0, 0})) == TruncatedSeries::one(4));
    CHECK(expand_direct(E(std::vector<long>(10, 1))) == S({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0}));
    auto necklace2 = ExponentSpec::necklace_spec(build_necklace_table(2, 8));
    CHECK(expand_direct(necklace2) == S({1, -2, 0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("pentagonal number theorem, both paths") {
    const std::uint64_t D = 60;
    auto expected = oracle::pentagonal_coefficients(D);
    auto spec = E(std::vector<long>(D, 1));
    auto direct = expand_direct(spec);
    auto recursive = expand_recursive(spec);
    for (std::uint64_t j = 0; j <= D; ++j) {
        CHECK(direct[j] == expected[j]);
        CHECK(recursive[j] == expected[j]);
    }
}

TEST_CASE("expand_recursive") {
    CHECK(expand_recursive(E({1, 0, 0, 0})) == S({1, -1, 0, 0, 0}));
    auto necklace3 = ExponentSpec::necklace_spec(build_necklace_table(3, 12));
    auto r = expand_recursive(necklace3);
    CHECK(r[0] == 1);
    CHECK(r[1] == -3);
    for (std::uint64_t j = 2; j <= 12; ++j) CHECK(r[j] == 0);
    auto euler = E(std::vector<long>(10, 1));
    CHECK(expand_recursive(euler) == expand_direct(euler));
}

TEST_CASE("divisor sums of a necklace spec are powers of the base") {
    for (std::uint64_t a : {1u, 2u, 6u, 13u}) {
        auto g = divisor_sums(ExponentSpec::necklace_spec(build_necklace_table(a, 30)));
        Integer power = 1;
        for (std::uint64_t k = 1; k <= 30; ++k) {
            power *= static_cast<unsigned long>(a);
            CHECK(g[k] == power);
        }
    }
}

TEST_CASE("property: recursive and direct expansions agree") {
    std::mt19937_64 rng(20261018);
    for (int trial = 0; trial < 200; ++trial) {
        const auto D = std::uniform_int_distribution<std::uint64_t>(1, 24)(rng);
        auto spec = random_spec(rng, D, 5);
        auto direct = expand_direct(spec);
        auto recursive = expand_recursive(spec);
        REQUIRE(direct == recursive);
        CHECK(direct[0] == 1);
    }
}

TEST_CASE("property: expansion turns exponent sums into products") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto D = std::uniform_int_distribution<std::uint64_t>(1, 20)(rng);
        auto x = random_spec(rng, D, 4);
        auto y = random_spec(rng, D, 4);
        std::vector<Integer> sum(D);
        for (std::uint64_t n = 1; n <= D; ++n) sum[n - 1] = x.exponent(n) + y.exponent(n);
        REQUIRE(expand_direct(ExponentSpec(sum)) == series_mul(expand_direct(x), expand_direct(y)));
    }
}

TEST_CASE("empty exponent specs and series are rejected") {
    CHECK_THROWS_AS(ExponentSpec({}), Error);
    CHECK_THROWS_AS(TruncatedSeries({}), Error);
}

TEST_CASE("eval_complex") {
    auto s = S({3, 5, -7});
    CHECK(eval_complex(s, 0.0) == std::complex<double>(3.0, 0.0));
    CHECK(eval_complex(S({1, -2, 0, 0}), 0.25).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eval_complex(S({1, -1, -1}), 0.1).real() == doctest::Approx(0.89).epsilon(1e-15));
    // 1 + i^2 = 0
    auto v = eval_complex(S({1, 0, 1}), {0.0, 1.0});
    CHECK(std::abs(v) < 1e-15);
}
