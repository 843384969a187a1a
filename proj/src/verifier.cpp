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

#include "necklace/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "necklace/error.hpp"

namespace necklace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double up(double x) { return std::nextafter(x, kInf); }
double down(double x) { return std::nextafter(x, -kInf); }

void require_regime(std::uint64_t a, double rho) {
    require(a >= 2, "numeric check: a must be >= 2");
    if (!(rho >= 0.0) || !(up(static_cast<double>(a) * rho) < 1.0))
        fail(Errc::outside_convergence,
             "a*|z| must be below 1; the identity holds only for |z| < 1/s with s > a (a = " + std::to_string(a) +
                 ", |z| = " + std::to_string(rho) + ")");
}

// -log(1 - u) / u for |u| < 1
std::complex<double> neg_log1m_over_u(std::complex<double> u) {
    if (std::abs(u) > 0.5) return -std::log(1.0 - u) / u;
    std::complex<double> sum = 1.0, power = 1.0;
    for (int m = 2; m < 200; ++m) {
        power *= u;
        const auto term = power / static_cast<double>(m);
        sum += term;
        if (std::abs(term) <= 0x1p-60 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

std::string to_string(ExpansionPath path) { return path == ExpansionPath::recursive ? "recursive" : "direct"; }

std::optional<CoefficientMismatch> mismatch_against_line(const TruncatedSeries& s, std::uint64_t a, ExpansionPath path) {
    for (std::uint64_t j = 0; j <= s.degree_bound(); ++j) {
        Integer expected = j == 0 ? Integer(1) : j == 1 ? Integer(-Integer(static_cast<unsigned long>(a))) : Integer(0);
        if (s[j] != expected) return CoefficientMismatch{path, j, std::move(expected), s[j]};
    }
    return std::nullopt;
}

SymbolicReport verify_symbolic(std::uint64_t a, std::uint64_t D, bool cross_check) {
    require(a >= 1, "symbolic check: a must be >= 1");
    require(D >= 1, "symbolic check: degree bound must be >= 1");

    const auto spec = ExponentSpec::necklace_spec(build_necklace_table(a, D));
    auto recursive = expand_recursive(spec);
    auto failure = mismatch_against_line(recursive, a, ExpansionPath::recursive);
    bool agree = true;
    if (cross_check) {
        auto direct = expand_direct(spec);
        agree = direct == recursive;
        if (!failure) failure = mismatch_against_line(direct, a, ExpansionPath::direct);
    }
    return SymbolicReport{a,     D,       !failure && agree, cross_check, agree, std::move(failure),
                          as_prime_power(a), std::move(recursive)};
}

double tail_log_bound(std::uint64_t a, double rho, std::uint64_t D) {
    require_regime(a, rho);
    const double ratio = up(static_cast<double>(a) * rho);
    double numerator = 1.0;
    for (std::uint64_t i = 0; i <= D && numerator > 0.0; ++i) numerator = up(numerator * ratio);
    if (numerator == 0.0) numerator = std::numeric_limits<double>::denorm_min();
    const double one_minus_rho = down(1.0 - up(rho));
    const double one_minus_ratio = down(1.0 - ratio);
    const double denominator = down(down(static_cast<double>(D + 1) * one_minus_rho) * one_minus_ratio);
    return up(numerator / denominator);
}

double tail_bound(std::uint64_t a, double rho, std::uint64_t D, double abs_truncated) {
    require(abs_truncated >= 0.0, "tail bound: |P_D(z)| must be nonnegative");
    const double b = tail_log_bound(a, rho, D);
    return up(up(abs_truncated) * up(up(std::expm1(b))));
}

NumericReport verify_numeric(std::uint64_t a, std::complex<double> z, std::uint64_t D) {
    require(D >= 1, "numeric check: degree bound must be >= 1");
    const double rho = up(std::abs(z));
    require_regime(a, rho);

    const auto table = build_necklace_table(a, D);
    const auto series = expand_recursive(ExponentSpec::necklace_spec(table));

    // largest magnitude seen along either evaluation, for the rounding allowance
    double largest = 1.0;

    std::complex<double> series_value = 0.0;
    for (auto it = series.coeffs().rbegin(); it != series.coeffs().rend(); ++it) {
        series_value = series_value * z + it->get_d();
        largest = std::max(largest, std::abs(series_value));
    }

    // Each factor (1 - u)^N with u = z^n is exp(-N u G(u)), G(u) = -log(1-u)/u.
    // N u is formed as (N / a^n) (a z)^n so neither piece overflows.
    std::complex<double> product_value = 1.0;
    const std::complex<double> az = static_cast<double>(a) * z;
    std::complex<double> u = 1.0, az_power = 1.0;
    Integer a_power = 1;
    for (std::uint64_t n = 1; n <= D; ++n) {
        u *= z;
        az_power *= az;
        a_power *= static_cast<unsigned long>(a);
        if (u == 0.0) break;
        const double density = mpq_class(table[n], a_power).get_d();
        const auto exponent = -density * az_power * neg_log1m_over_u(u);
        product_value *= std::exp(exponent);
        largest = std::max({largest, std::abs(exponent), std::abs(product_value)});
    }

    const std::complex<double> target = 1.0 - static_cast<double>(a) * z;
    const double residual = std::max(std::abs(series_value - target), std::abs(product_value - target));
    const double abs_truncated = std::max(std::abs(series_value), std::abs(product_value));
    const double log_bound = tail_log_bound(a, rho, D);
    const double bound = tail_bound(a, rho, D, abs_truncated);
    const double slack = up(static_cast<double>(D + 1) * largest * 0x1p-50);

    return NumericReport{a,        z,         D,     series_value, product_value, target,           residual,
                         log_bound, bound,    slack, residual <= bound + slack, as_prime_power(a)};
}

BridgeReport verify_count_bridge(std::uint64_t p, std::uint64_t k, std::uint64_t n_max, const BridgeOptions& options) {
    require(n_max >= 1, "bridge: n_max must be >= 1");
    require(options.count.budget >= 1, "bridge: budget must be >= 1");
    const auto field = FieldContext::build(p, k);

    std::uint64_t feasible = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        auto size = checked_pow(field->q(), n);
        if (!size || *size > options.count.budget) break;
        feasible = n;
    }
    if (feasible < n_max)
        fail(Errc::budget_exceeded, "bridge: q^n_max = " + std::to_string(field->q()) + "^" + std::to_string(n_max) +
                                        " exceeds the enumeration budget of " + std::to_string(options.count.budget) +
                                        "; the largest feasible n_max is " + std::to_string(feasible));

    BridgeReport report{p, k, field->q(), field->modulus(), options.test, {}, true};
    const auto table = build_necklace_table(field->q(), n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const auto count = count_irreducibles(field, n, options.test, options.count);
        const bool equal = table[n] == Integer(static_cast<unsigned long>(count));
        report.rows.push_back(BridgeRow{n, count, table[n], equal});
        report.pass = report.pass && equal;
    }
    return report;
}

}  // namespace necklace
