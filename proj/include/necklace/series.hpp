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

#ifndef NECKLACE_SERIES_HPP
#define NECKLACE_SERIES_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "necklace/exact_arith.hpp"

namespace necklace {

/// Power series with exact integer coefficients, kept modulo z^(D+1).
class TruncatedSeries {
   public:
    /// The constant series 1.
    static TruncatedSeries one(std::uint64_t degree_bound);

    /// Takes ownership of c_0..c_D; rejects an empty vector.
    explicit TruncatedSeries(std::vector<Integer> coeffs);

    std::uint64_t degree_bound() const noexcept { return coeffs_.size() - 1; }
    const Integer& operator[](std::uint64_t j) const { return coeffs_.at(j); }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

   private:
    std::vector<Integer> coeffs_;
};

/// Exponents e(1..D) of the product prod_{n<=D} (1 - z^n)^e(n).
///
/// A spec built by necklace_spec() remembers its base a; expand_recursive
/// then asserts that each divisor sum sum_{d|k} d e(d) equals a^k.
class ExponentSpec {
   public:
    explicit ExponentSpec(std::vector<Integer> exponents);

    static ExponentSpec necklace_spec(const NecklaceTable& table);

    std::uint64_t degree_bound() const noexcept { return exponents_.size(); }
    /// e(n) for 1 <= n <= degree_bound().
    const Integer& exponent(std::uint64_t n) const { return exponents_.at(n - 1); }
    const std::vector<Integer>& exponents() const noexcept { return exponents_; }
    std::optional<std::uint64_t> necklace_base() const noexcept { return necklace_base_; }

   private:
    std::vector<Integer> exponents_;
    std::optional<std::uint64_t> necklace_base_;
};

/// Cauchy product truncated at the shared degree bound.
TruncatedSeries series_mul(const TruncatedSeries& x, const TruncatedSeries& y);

/// (1 - z^n)^e mod z^(D+1) via the generalized binomial theorem, valid for
/// any integer e (negative e gives the negative-binomial series).
TruncatedSeries binomial_factor(std::uint64_t n, const Integer& e, std::uint64_t D);

/// Literal product of the binomial factors.
TruncatedSeries expand_direct(const ExponentSpec& spec);

/// Coefficients from the convolution recursion
///   n r(n) = -sum_{k=1}^{n} r(n-k) g(k),  g(k) = sum_{d|k} d e(d).
TruncatedSeries expand_recursive(const ExponentSpec& spec);

/// The divisor sums g(1..D) used by expand_recursive (index 0 unused).
std::vector<Integer> divisor_sums(const ExponentSpec& spec);

/// Horner evaluation in double precision; approximate.
std::complex<double> eval_complex(const TruncatedSeries& s, std::complex<double> z);

}  // namespace necklace

#endif
