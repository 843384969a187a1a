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

#ifndef NECKLACE_EXACT_ARITH_HPP
#define NECKLACE_EXACT_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace necklace {

using Integer = mpz_class;

/// Möbius function by trial-division factorization. Rejects n = 0.
int mobius(std::uint64_t n);

/// Positive divisors of n in ascending order. Rejects n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Möbius values mu(1..limit); index 0 is unused and holds 0.
std::vector<int> mobius_sieve(std::uint64_t limit);

/// Sum over d | n of mu(n/d) * a^d. Always divisible by n (Gauss congruence).
Integer necklace_numerator(std::uint64_t a, std::uint64_t n);

/// N(a, n) = (1/n) * sum_{d | n} mu(n/d) a^d, the number of aperiodic
/// necklaces of n beads in a colours. Requires a >= 1 and n >= 1.
Integer necklace_count(std::uint64_t a, std::uint64_t n);

/// Immutable table of N(a, 1..D) for a fixed base.
class NecklaceTable {
   public:
    NecklaceTable(std::uint64_t base, std::vector<Integer> values);

    std::uint64_t base() const noexcept { return base_; }
    std::uint64_t degree_bound() const noexcept { return values_.size(); }

    /// N(base, n) for 1 <= n <= degree_bound().
    const Integer& operator[](std::uint64_t n) const;
    const std::vector<Integer>& values() const noexcept { return values_; }

   private:
    std::uint64_t base_;
    std::vector<Integer> values_;
};

/// Builds N(a, 1..D) with a shared Möbius sieve.
NecklaceTable build_necklace_table(std::uint64_t a, std::uint64_t D);

bool is_prime(std::uint64_t n);

struct PrimePower {
    std::uint64_t p;
    std::uint64_t k;
};

/// Returns (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Integer power a^n for small operands, refusing results that overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t a, std::uint64_t n);

/// Parses a signed decimal integer, rejecting anything else.
Integer parse_integer(const std::string& text);

}  // namespace necklace

#endif
