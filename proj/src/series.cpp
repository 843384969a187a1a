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

#include "necklace/series.hpp"

#include <string>

#include "necklace/error.hpp"

namespace necklace {

TruncatedSeries TruncatedSeries::one(std::uint64_t degree_bound) {
    std::vector<Integer> c(degree_bound + 1, Integer(0));
    c[0] = 1;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    require(!coeffs_.empty(), "series: need at least one coefficient");
}

ExponentSpec::ExponentSpec(std::vector<Integer> exponents) : exponents_(std::move(exponents)) {
    require(!exponents_.empty(), "exponent spec: degree bound must be >= 1");
}

ExponentSpec ExponentSpec::necklace_spec(const NecklaceTable& table) {
    ExponentSpec spec(table.values());
    spec.necklace_base_ = table.base();
    return spec;
}

TruncatedSeries series_mul(const TruncatedSeries& x, const TruncatedSeries& y) {
    if (x.degree_bound() != y.degree_bound())
        fail(Errc::degree_mismatch, "series_mul: degree bounds differ (" + std::to_string(x.degree_bound()) +
                                        " vs " + std::to_string(y.degree_bound()) + ")");
    const auto D = x.degree_bound();
    std::vector<Integer> out(D + 1, Integer(0));
    for (std::uint64_t i = 0; i <= D; ++i) {
        if (x[i] == 0) continue;
        for (std::uint64_t j = 0; i + j <= D; ++j)
            if (y[j] != 0) out[i + j] += x[i] * y[j];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries binomial_factor(std::uint64_t n, const Integer& e, std::uint64_t D) {
    require(n >= 1 && n <= D, "binomial_factor: need 1 <= n <= D");
    std::vector<Integer> out(D + 1, Integer(0));
    // coefficient of z^(nj) is (-1)^j C(e, j); C(e, j) = C(e, j-1) (e - j + 1) / j
    Integer binom = 1;
    out[0] = 1;
    for (std::uint64_t j = 1; j <= D / n; ++j) {
        binom *= e - Integer(static_cast<unsigned long>(j - 1));
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(j));
        if (binom == 0) break;
        out[n * j] = (j % 2 == 0) ? binom : Integer(-binom);
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries expand_direct(const ExponentSpec& spec) {
    const auto D = spec.degree_bound();
    auto acc = TruncatedSeries::one(D);
    for (std::uint64_t n = 1; n <= D; ++n) {
        if (spec.exponent(n) == 0) continue;
        acc = series_mul(acc, binomial_factor(n, spec.exponent(n), D));
    }
    return acc;
}

std::vector<Integer> divisor_sums(const ExponentSpec& spec) {
    const auto D = spec.degree_bound();
    std::vector<Integer> g(D + 1, Integer(0));
    for (std::uint64_t d = 1; d <= D; ++d) {
        Integer term = spec.exponent(d) * Integer(static_cast<unsigned long>(d));
        if (term == 0) continue;
        for (std::uint64_t k = d; k <= D; k += d) g[k] += term;
    }
    return g;
}

TruncatedSeries expand_recursive(const ExponentSpec& spec) {
    const auto D = spec.degree_bound();
    const auto g = divisor_sums(spec);

    if (auto a = spec.necklace_base()) {
        Integer power = 1;
        for (std::uint64_t k = 1; k <= D; ++k) {
            power *= static_cast<unsigned long>(*a);
            if (g[k] != power)
                fail(Errc::internal, "expand_recursive: divisor sum g(" + std::to_string(k) + ") != a^" +
                                         std::to_string(k) + " for a necklace spec");
        }
    }

    std::vector<Integer> r(D + 1, Integer(0));
    r[0] = 1;
    Integer sum;
    for (std::uint64_t n = 1; n <= D; ++n) {
        sum = 0;
        for (std::uint64_t k = 1; k <= n; ++k)
            if (r[n - k] != 0 && g[k] != 0) sum += r[n - k] * g[k];
        if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(n)))
            fail(Errc::internal, "expand_recursive: coefficient " + std::to_string(n) + " is not integral");
        mpz_divexact_ui(r[n].get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(n));
        r[n] = -r[n];
    }
    return TruncatedSeries(std::move(r));
}

std::complex<double> eval_complex(const TruncatedSeries& s, std::complex<double> z) {
    const auto& c = s.coeffs();
    std::complex<double> acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + it->get_d();
    return acc;
}

}  // namespace necklace
