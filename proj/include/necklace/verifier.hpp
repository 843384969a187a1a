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

#ifndef NECKLACE_VERIFIER_HPP
#define NECKLACE_VERIFIER_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "necklace/exact_arith.hpp"
#include "necklace/finite_field.hpp"
#include "necklace/series.hpp"

namespace necklace {

// Symbolic check: prod_{n<=D} (1 - z^n)^N(a,n) == 1 - a z  (mod z^(D+1)).

enum class ExpansionPath { recursive, direct };

std::string to_string(ExpansionPath path);

struct CoefficientMismatch {
    ExpansionPath path;
    std::uint64_t index;
    Integer expected;
    Integer actual;
};

struct SymbolicReport {
    std::uint64_t base;
    std::uint64_t degree_bound;
    bool pass;
    bool cross_checked;
    /// Recursive and direct coefficients identical; true when not cross-checked.
    bool paths_agree;
    std::optional<CoefficientMismatch> first_failure;
    std::optional<PrimePower> prime_power;
    TruncatedSeries coefficients;
};

/// First coefficient where s differs from 1 - a z, if any.
std::optional<CoefficientMismatch> mismatch_against_line(const TruncatedSeries& s, std::uint64_t a,
                                                         ExpansionPath path);

SymbolicReport verify_symbolic(std::uint64_t a, std::uint64_t D, bool cross_check = false);

// Numeric check with an explicit remainder estimate.
//
// With N(a,n) <= a^n / n and |log(1 - u)| <= |u| / (1 - |u|) for |u| < 1,
// the omitted factors n > D satisfy, for |z| <= rho,
//   sum_{n>D} N(a,n) |log(1 - z^n)| <= (a rho)^(D+1) / ((D+1)(1 - rho)(1 - a rho)).

/// Upper bound on the log of the omitted tail; every operation rounds outward.
/// Requires a >= 2 and a * rho < 1.
double tail_log_bound(std::uint64_t a, double rho, std::uint64_t D);

/// |P_D(z)| (e^B - 1), the bound on |P_inf(z) - P_D(z)| given B = tail_log_bound.
double tail_bound(std::uint64_t a, double rho, std::uint64_t D, double abs_truncated);

struct NumericReport {
    std::uint64_t base;
    std::complex<double> z;
    std::uint64_t degree_bound;
    /// Horner value of the expanded coefficient vector.
    std::complex<double> series_value;
    /// prod_{n<=D} (1 - z^n)^N(a,n), evaluated factor by factor.
    std::complex<double> product_value;
    std::complex<double> target;
    double residual;
    double tail_log_bound;
    double tail_bound;
    double float_slack;
    bool pass;
    std::optional<PrimePower> prime_power;
};

/// Requires a >= 2 and a |z| < 1.
NumericReport verify_numeric(std::uint64_t a, std::complex<double> z, std::uint64_t D);

// Bridge: brute-force irreducible counts against N(q, n).

struct BridgeRow {
    std::uint64_t n;
    std::uint64_t count;
    Integer necklace;
    bool equal;
};

struct BridgeReport {
    std::uint64_t p;
    std::uint64_t k;
    std::uint64_t q;
    std::vector<std::uint32_t> modulus;
    IrreducibilityTest test;
    std::vector<BridgeRow> rows;
    bool pass;
};

struct BridgeOptions {
    IrreducibilityTest test = IrreducibilityTest::rabin;
    CountOptions count;
};

BridgeReport verify_count_bridge(std::uint64_t p, std::uint64_t k, std::uint64_t n_max,
                                 const BridgeOptions& options = {});

}  // namespace necklace

#endif
