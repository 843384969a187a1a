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

#include <cmath>

#include "necklace/error.hpp"
#include "necklace/serialize.hpp"
#include "necklace/verifier.hpp"

using namespace necklace;

namespace {

Errc code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::internal;
}

// (a rho)^(D+1) / ((D+1)(1 - rho)(1 - a rho)) in long double
long double closed_form(std::uint64_t a, long double rho, std::uint64_t D) {
    return std::pow(a * rho, static_cast<long double>(D + 1)) / ((D + 1) * (1 - rho) * (1 - a * rho));
}

// sum_{n=D+1}^{D+400} N(a,n) |log(1 - rho^n)| at the positive real point rho
long double actual_tail(std::uint64_t a, long double rho, std::uint64_t D) {
    auto table = build_necklace_table(a, D + 400);
    long double sum = 0;
    for (std::uint64_t n = D + 1; n <= D + 400; ++n) {
        const long double u = std::pow(rho, static_cast<long double>(n));
        long exp2 = 0;
        const double mantissa = mpz_get_d_2exp(&exp2, table[n].get_mpz_t());
        sum += std::ldexp(static_cast<long double>(mantissa), static_cast<int>(exp2)) * std::fabs(std::log1p(-u));
    }
    return sum;
}

}  // namespace

TEST_CASE("verify_symbolic: documented cases") {
    auto r2 = verify_symbolic(2, 32);
    CHECK(r2.pass);
    CHECK(!r2.first_failure);
    CHECK(r2.coefficients[1] == -2);
    REQUIRE(r2.prime_power);
    CHECK(r2.prime_power->p == 2);

    auto r1 = verify_symbolic(1, 8);
    CHECK(r1.pass);
    CHECK(r1.coefficients[0] == 1);
    CHECK(r1.coefficients[1] == -1);
    for (std::uint64_t j = 2; j <= 8; ++j) CHECK(r1.coefficients[j] == 0);
    CHECK(!r1.prime_power);

    auto r9 = verify_symbolic(9, 16, true);
    CHECK(r9.pass);
    CHECK(r9.cross_checked);
    CHECK(r9.paths_agree);
    CHECK(r9.prime_power->p == 3);
    CHECK(r9.prime_power->k == 2);
}

TEST_CASE("verify_symbolic: the identity also holds for bases that are not prime powers") {
    for (std::uint64_t a : {6u, 10u, 12u, 100u}) {
        auto r = verify_symbolic(a, 40, true);
        CHECK(r.pass);
        CHECK(!r.prime_power);
    }
}

TEST_CASE("verify_symbolic: D = 64 for the listed bases") {
    for (std::uint64_t a : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 16u, 25u, 27u}) {
        auto r = verify_symbolic(a, 64, true);
        CHECK_MESSAGE(r.pass, "a = " << a);
        CHECK(r.coefficients.degree_bound() == 64);
    }
}

TEST_CASE("mismatch_against_line reports the first bad coefficient") {
    std::vector<Integer> c{1, -3, 0, 0, 5, 1};
    auto m = mismatch_against_line(TruncatedSeries(c), 3, ExpansionPath::direct);
    REQUIRE(m);
    CHECK(m->index == 4);
    CHECK(m->expected == 0);
    CHECK(m->actual == 5);
    CHECK(m->path == ExpansionPath::direct);
    CHECK(!mismatch_against_line(TruncatedSeries({1, -3, 0}), 3, ExpansionPath::recursive));
    auto wrong_lead = mismatch_against_line(TruncatedSeries({1, -2}), 3, ExpansionPath::recursive);
    REQUIRE(wrong_lead);
    CHECK(wrong_lead->index == 1);

    auto doc = json::symbolic(SymbolicReport{3, 5, false, false, true, m, as_prime_power(3), TruncatedSeries(c)});
    CHECK(doc["pass"] == false);
    CHECK(doc["first_failure"]["index"] == 4);
    CHECK(doc["first_failure"]["actual"] == "5");
    CHECK(doc["first_failure"]["path"] == "direct");
}

TEST_CASE("verify_symbolic: argument validation") {
    CHECK(code_of([] { verify_symbolic(0, 8); }) == Errc::invalid_argument);
    CHECK(code_of([] { verify_symbolic(2, 0); }) == Errc::invalid_argument);
}

TEST_CASE("tail_log_bound: documented magnitudes") {
    CHECK(tail_log_bound(2, 0.3, 60) <= 1e-12);
    CHECK(tail_log_bound(3, 0.1, 40) <= 1e-20);
}

TEST_CASE("tail_log_bound: never below the closed form") {
    for (std::uint64_t a : {2u, 3u, 5u, 9u})
        for (double rho : {0.01, 0.05, 0.1, 0.2 / a, 0.5 / a, 0.9 / a, 0.99 / a})
            for (std::uint64_t D : {1u, 5u, 20u, 80u, 200u}) {
                const double b = tail_log_bound(a, rho, D);
                if (a * rho >= 1) continue;
                const long double exact = closed_form(a, rho, D);
                CHECK(static_cast<long double>(b) >= exact);
                if (exact > 1e-300L) CHECK(static_cast<long double>(b) <= exact * (1 + 1e-12L));
            }
}

TEST_CASE("tail_log_bound: dominates the actual omitted tail") {
    for (std::uint64_t a : {2u, 3u, 5u})
        for (double scale : {0.3, 0.6, 0.9})
            for (std::uint64_t D : {5u, 20u, 60u}) {
                const double rho = scale / a;
                CHECK(static_cast<long double>(tail_log_bound(a, rho, D)) >= actual_tail(a, rho, D));
            }
}

TEST_CASE("tail_log_bound: decreasing in D") {
    for (std::uint64_t a : {2u, 3u, 7u}) {
        const double rho = 0.8 / a;
        double previous = tail_log_bound(a, rho, 1);
        for (std::uint64_t D = 2; D <= 120; ++D) {
            const double b = tail_log_bound(a, rho, D);
            CHECK(b < previous);
            previous = b;
        }
    }
}

TEST_CASE("tail bounds: regime checks") {
    CHECK(code_of([] { tail_log_bound(2, 0.5, 10); }) == Errc::outside_convergence);
    CHECK(code_of([] { tail_log_bound(3, 0.4, 10); }) == Errc::outside_convergence);
    CHECK(code_of([] { tail_log_bound(2, -0.1, 10); }) == Errc::outside_convergence);
    CHECK(code_of([] { tail_log_bound(1, 0.1, 10); }) == Errc::invalid_argument);
    CHECK(tail_bound(2, 0.3, 60, 0.0) < 1e-300);
    CHECK(tail_bound(2, 0.3, 60, 1.0) >= tail_log_bound(2, 0.3, 60));
}

TEST_CASE("verify_numeric: documented cases") {
    auto origin = verify_numeric(2, 0.0, 10);
    CHECK(origin.series_value == std::complex<double>(1.0, 0.0));
    CHECK(origin.product_value == std::complex<double>(1.0, 0.0));
    CHECK(origin.target == std::complex<double>(1.0, 0.0));
    CHECK(origin.residual == 0.0);
    CHECK(origin.pass);

    auto quarter = verify_numeric(2, 0.25, 40);
    CHECK(quarter.target == std::complex<double>(0.5, 0.0));
    CHECK(std::abs(quarter.product_value - 0.5) < 1e-12);
    CHECK(quarter.pass);

    auto complex_point = verify_numeric(3, {0.1, 0.1}, 50);
    CHECK(std::abs(complex_point.target - std::complex<double>(0.7, -0.3)) < 1e-15);
    CHECK(complex_point.pass);

    auto fixed = verify_numeric(2, 0.3, 60);
    CHECK(fixed.residual <= 1e-12);
    CHECK(fixed.pass);
}

TEST_CASE("verify_numeric: the truncation error is visible and covered") {
    // with a small degree bound the finite product is measurably off, but
    // never by more than the bound
    for (std::uint64_t D : {2u, 4u, 8u, 16u}) {
        auto r = verify_numeric(2, 0.4, D);
        CHECK(r.residual > r.float_slack);
        CHECK(r.residual <= r.tail_bound + r.float_slack);
        CHECK(r.pass);
    }
}

TEST_CASE("verify_numeric: regime and validation") {
    CHECK(code_of([] { verify_numeric(3, {0.5, 0.0}, 10); }) == Errc::outside_convergence);
    CHECK(code_of([] { verify_numeric(3, {1.0 / 3.0, 0.0}, 10); }) == Errc::outside_convergence);
    CHECK(code_of([] { verify_numeric(2, {0.3, 0.4}, 10); }) == Errc::outside_convergence);
    CHECK(code_of([] { verify_numeric(1, {0.1, 0.0}, 10); }) == Errc::invalid_argument);
    CHECK(code_of([] { verify_numeric(2, {0.1, 0.0}, 0); }) == Errc::invalid_argument);
    try {
        verify_numeric(3, {0.5, 0.0}, 10);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("1/s") != std::string::npos);
    }
}

TEST_CASE("verify_count_bridge") {
    auto f2 = verify_count_bridge(2, 1, 10);
    CHECK(f2.pass);
    const std::uint64_t expected[] = {2, 1, 2, 3, 6, 9, 18, 30, 56, 99};
    REQUIRE(f2.rows.size() == 10);
    for (std::uint64_t n = 1; n <= 10; ++n) {
        CHECK(f2.rows[n - 1].count == expected[n - 1]);
        CHECK(f2.rows[n - 1].equal);
    }

    auto f4 = verify_count_bridge(2, 2, 5, {IrreducibilityTest::trial, {}});
    CHECK(f4.pass);
    CHECK(f4.q == 4);

    auto f5 = verify_count_bridge(5, 1, 1);
    CHECK(f5.pass);
    CHECK(f5.rows[0].count == 5);
    CHECK(f5.rows[0].necklace == 5);
}

TEST_CASE("verify_count_bridge: budget refusal names the feasible n_max") {
    BridgeOptions options;
    options.count.budget = 1000;
    try {
        verify_count_bridge(2, 1, 12, options);
        FAIL("expected refusal");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::budget_exceeded);
        CHECK(std::string(e.what()).find("largest feasible n_max is 9") != std::string::npos);
    }
    CHECK(code_of([] { verify_count_bridge(6, 1, 2); }) == Errc::not_prime);
    CHECK(code_of([] { verify_count_bridge(2, 1, 0); }) == Errc::invalid_argument);
}
