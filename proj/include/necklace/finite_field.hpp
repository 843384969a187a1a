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

#ifndef NECKLACE_FINITE_FIELD_HPP
#define NECKLACE_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace necklace {

/// Element of F_{p^k}, packed as the base-p number whose digits are the
/// residue's coefficients over F_p (lowest degree = least significant digit).
using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

/// F_q with q = p^k, realized as F_p[t] / (modulus). Immutable.
class FieldContext {
   public:
    /// Prime field for k = 1 (modulus x); otherwise the lexicographically
    /// smallest monic irreducible of degree k, coefficients compared from
    /// the constant term upward.
    static std::shared_ptr<const FieldContext> build(std::uint64_t p, std::uint64_t k);

    /// F_p[t] / (modulus) for an explicit monic modulus over F_p given low
    /// degree first. The modulus is checked for irreducibility.
    static std::shared_ptr<const FieldContext> with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Monic, degree k, low degree first.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept { return sub(0, a); }
    Elem mul(Elem a, Elem b) const noexcept;
    /// Multiplicative inverse; a must be nonzero.
    Elem inv(Elem a) const;

    /// Base-p digits of a (k entries, lowest degree first).
    std::vector<std::uint32_t> digits(Elem a) const;
    std::string element_to_string(Elem a) const;

   private:
    FieldContext(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

/// Monic polynomial over a FieldContext, coefficients lowest degree first.
class MonicPoly {
   public:
    MonicPoly(FieldPtr field, std::vector<Elem> coeffs);

    const FieldContext& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::uint64_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }

    /// "x^2 + x + 1"; extension-field coefficients print as (a + 1) in the
    /// generator a of the modulus.
    std::string to_string() const;

    friend bool operator==(const MonicPoly& x, const MonicPoly& y) {
        return x.field_ == y.field_ && x.coeffs_ == y.coeffs_;
    }

   private:
    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

enum class IrreducibilityTest { trial, rabin };

/// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible_trial(const MonicPoly& f);
/// x^(q^n) = x (mod f) and gcd(x^(q^(n/l)) - x, f) = 1 for each prime l | n.
bool is_irreducible_rabin(const MonicPoly& f);

bool is_irreducible_trial(const FieldContext& field, std::span<const Elem> monic);
bool is_irreducible_rabin(const FieldContext& field, std::span<const Elem> monic);

/// Walks the q^n monic polynomials of degree n in lexicographic order
/// (constant term most significant), or a contiguous block of them.
class MonicEnumerator {
   public:
    MonicEnumerator(FieldPtr field, std::uint64_t n, std::uint64_t budget = kDefaultEnumerationBudget);

    std::uint64_t size() const noexcept { return total_; }

    /// Restricts the walk to ranks [first, last).
    MonicEnumerator block(std::uint64_t first, std::uint64_t last) const;

    /// Advances to the next polynomial; returns false when exhausted.
    bool next();
    /// Coefficients of the current polynomial (valid after next() returned true).
    std::span<const Elem> current() const noexcept { return coeffs_; }
    MonicPoly current_poly() const { return MonicPoly(field_, coeffs_); }

   private:
    void seek(std::uint64_t rank);

    FieldPtr field_;
    std::uint64_t n_;
    std::uint64_t total_;
    std::uint64_t rank_ = 0;
    std::uint64_t end_;
    bool started_ = false;
    std::vector<Elem> coeffs_;
};

/// q^n, or a budget_exceeded error if it is larger than budget.
std::uint64_t enumeration_size(const FieldContext& field, std::uint64_t n, std::uint64_t budget);

struct CountOptions {
    std::uint64_t budget = kDefaultEnumerationBudget;
    unsigned workers = 1;
};

/// Number of monic irreducibles of degree n over the field, by enumeration.
std::uint64_t count_irreducibles(const FieldPtr& field, std::uint64_t n, IrreducibilityTest test,
                                 const CountOptions& options = {});

}  // namespace necklace

#endif
