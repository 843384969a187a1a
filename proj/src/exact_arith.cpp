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

#include "necklace/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "necklace/error.hpp"

namespace necklace {

namespace {

Integer power(std::uint64_t a, std::uint64_t d) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), a, d);
    return r;
}

Integer to_integer(std::uint64_t v) {
    Integer r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return r;
}

// sum_{d | n} mu(n/d) a^d, with mu supplied by the caller
template <class Mu>
Integer numerator_with(std::uint64_t a, std::uint64_t n, Mu&& mu) {
    Integer sum = 0;
    for (auto d : divisors(n)) {
        int m = mu(n / d);
        if (m == 1)
            sum += power(a, d);
        else if (m == -1)
            sum -= power(a, d);
    }
    return sum;
}

Integer divide_exact(const Integer& numerator, std::uint64_t n) {
    Integer divisor = to_integer(n);
    if (!mpz_divisible_p(numerator.get_mpz_t(), divisor.get_mpz_t()))
        fail(Errc::internal, "necklace numerator not divisible by n = " + std::to_string(n));
    Integer q;
    mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), divisor.get_mpz_t());
    return q;
}

}  // namespace

int mobius(std::uint64_t n) {
    require(n >= 1, "mobius: n must be >= 1");
    int sign = 1;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    require(n >= 1, "divisors: n must be >= 1");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<int> mobius_sieve(std::uint64_t limit) {
    std::vector<int> mu(limit + 1, 1);
    std::vector<bool> composite(limit + 1, false);
    mu[0] = 0;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t m = p; m <= limit; m += p) {
            if (m > p) composite[m] = true;
            mu[m] = -mu[m];
        }
        if (p <= limit / p)
            for (std::uint64_t m = p * p; m <= limit; m += p * p) mu[m] = 0;
    }
    return mu;
}

Integer necklace_numerator(std::uint64_t a, std::uint64_t n) {
    require(n >= 1, "necklace: n must be >= 1");
    return numerator_with(a, n, [](std::uint64_t m) { return mobius(m); });
}

Integer necklace_count(std::uint64_t a, std::uint64_t n) {
    require(a >= 1, "necklace: a must be >= 1");
    require(n >= 1, "necklace: n must be >= 1");
    return divide_exact(necklace_numerator(a, n), n);
}

NecklaceTable::NecklaceTable(std::uint64_t base, std::vector<Integer> values)
    : base_(base), values_(std::move(values)) {
    require(base_ >= 1, "necklace table: base must be >= 1");
    require(!values_.empty(), "necklace table: degree bound must be >= 1");
}

const Integer& NecklaceTable::operator[](std::uint64_t n) const {
    require(n >= 1 && n <= values_.size(), "necklace table: index out of range");
    return values_[n - 1];
}

NecklaceTable build_necklace_table(std::uint64_t a, std::uint64_t D) {
    require(a >= 1, "necklace table: a must be >= 1");
    require(D >= 1, "necklace table: degree bound must be >= 1");
    auto mu = mobius_sieve(D);
    std::vector<Integer> values;
    values.reserve(D);
    for (std::uint64_t n = 1; n <= D; ++n)
        values.push_back(divide_exact(numerator_with(a, n, [&](std::uint64_t m) { return mu[m]; }), n));
    return NecklaceTable(a, std::move(values));
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d <= n / d; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d <= q / d; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint64_t k = 0;
    for (std::uint64_t r = q; r > 1; r /= p) {
        if (r % p != 0) return std::nullopt;
        ++k;
    }
    return PrimePower{p, k};
}

std::optional<std::uint64_t> checked_pow(std::uint64_t a, std::uint64_t n) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (a != 0 && r > std::numeric_limits<std::uint64_t>::max() / a) return std::nullopt;
        r *= a;
    }
    return r;
}

Integer parse_integer(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    bool ok = text.size() > start &&
              std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                          [](unsigned char c) { return std::isdigit(c) != 0; });
    require(ok, "not a decimal integer: '" + text + "'");
    Integer v;
    v.set_str(text[0] == '+' ? text.substr(1) : text, 10);
    return v;
}

}  // namespace necklace
