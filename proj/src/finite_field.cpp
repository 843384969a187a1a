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

#include "necklace/finite_field.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <thread>

#include "necklace/error.hpp"
#include "necklace/exact_arith.hpp"

namespace necklace {

namespace {

// q < 2^32 and p >= 2, so k never exceeds 31
constexpr std::size_t kMaxDegree = 32;
using Digits = std::array<std::uint32_t, kMaxDegree>;

using Poly = std::vector<Elem>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Polynomial arithmetic over a fixed field; polynomials are low degree first,
// trimmed, and the zero polynomial is empty.
class PolyArith {
   public:
    explicit PolyArith(const FieldContext& field) : F(field) {}

    // a mod f for monic f, in place
    void rem_monic(Poly& a, std::span<const Elem> f) const {
        const std::size_t m = f.size() - 1;
        for (std::size_t i = a.size(); i-- > m;) {
            const Elem c = a[i];
            if (c == 0) continue;
            for (std::size_t j = 0; j < m; ++j) a[i - m + j] = F.sub(a[i - m + j], F.mul(c, f[j]));
            a[i] = 0;
        }
        if (a.size() > m) a.resize(m);
        trim(a);
    }

    // a mod b for any nonzero b
    void rem(Poly& a, const Poly& b) const {
        const std::size_t m = b.size() - 1;
        const Elem lead_inv = F.inv(b.back());
        for (std::size_t i = a.size(); i-- > m;) {
            const Elem c = F.mul(a[i], lead_inv);
            if (c == 0) continue;
            for (std::size_t j = 0; j < m; ++j) a[i - m + j] = F.sub(a[i - m + j], F.mul(c, b[j]));
            a[i] = 0;
        }
        if (a.size() > m) a.resize(m);
        trim(a);
    }

    Poly mulmod(const Poly& a, const Poly& b, std::span<const Elem> f) const {
        if (a.empty() || b.empty()) return {};
        Poly out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
        }
        trim(out);
        rem_monic(out, f);
        return out;
    }

    Poly powmod(Poly base, std::uint64_t e, std::span<const Elem> f) const {
        Poly acc{1};
        rem_monic(acc, f);
        while (e > 0) {
            if (e & 1) acc = mulmod(acc, base, f);
            e >>= 1;
            if (e > 0) base = mulmod(base, base, f);
        }
        return acc;
    }

    Poly sub(const Poly& a, const Poly& b) const {
        Poly out(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
        trim(out);
        return out;
    }

    Poly gcd(Poly a, Poly b) const {
        while (!b.empty()) {
            rem(a, b);
            std::swap(a, b);
        }
        return a;
    }

   private:
    const FieldContext& F;
};

void validate_monic(const FieldContext& field, std::span<const Elem> f) {
    require(f.size() >= 2, "irreducibility test: degree must be >= 1");
    require(f.back() == 1, "irreducibility test: polynomial must be monic");
    for (auto c : f) require(c < field.q(), "irreducibility test: coefficient outside the field");
}

}  // namespace

FieldContext::FieldContext(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
    q_ = static_cast<std::uint32_t>(*checked_pow(p_, k_));
}

std::shared_ptr<const FieldContext> FieldContext::build(std::uint64_t p, std::uint64_t k) {
    if (!is_prime(p)) fail(Errc::not_prime, "field: p = " + std::to_string(p) + " is not prime");
    require(k >= 1, "field: extension degree k must be >= 1");
    auto q = checked_pow(p, k);
    require(q && *q < (std::uint64_t{1} << 32), "field: q = p^k must be below 2^32");
    auto prime = std::shared_ptr<const FieldContext>(new FieldContext(static_cast<std::uint32_t>(p), {0, 1}));
    if (k == 1) return prime;
    MonicEnumerator candidates(prime, k, std::numeric_limits<std::uint64_t>::max());
    while (candidates.next()) {
        if (is_irreducible_trial(*prime, candidates.current())) {
            const auto c = candidates.current();
            return std::shared_ptr<const FieldContext>(
                new FieldContext(static_cast<std::uint32_t>(p), std::vector<std::uint32_t>(c.begin(), c.end())));
        }
    }
    fail(Errc::internal, "field: no irreducible polynomial of degree " + std::to_string(k) + " found");
}

std::shared_ptr<const FieldContext> FieldContext::with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) fail(Errc::not_prime, "field: p = " + std::to_string(p) + " is not prime");
    require(modulus.size() >= 2, "field: modulus must have degree >= 1");
    require(modulus.back() == 1, "field: modulus must be monic");
    for (auto c : modulus) require(c < p, "field: modulus coefficient outside F_p");
    auto q = checked_pow(p, modulus.size() - 1);
    require(q && *q < (std::uint64_t{1} << 32), "field: q = p^k must be below 2^32");
    auto prime = FieldContext(static_cast<std::uint32_t>(p), {0, 1});
    require(is_irreducible_trial(prime, modulus), "field: modulus is reducible over F_p");
    return std::shared_ptr<const FieldContext>(new FieldContext(static_cast<std::uint32_t>(p), std::move(modulus)));
}

Elem FieldContext::add(Elem a, Elem b) const noexcept {
    if (k_ == 1) return static_cast<Elem>((std::uint64_t{a} + b) % p_);
    Elem out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_, b /= p_, scale *= p_) out += ((a % p_ + b % p_) % p_) * scale;
    return out;
}

Elem FieldContext::sub(Elem a, Elem b) const noexcept {
    if (k_ == 1) return static_cast<Elem>((std::uint64_t{a} + p_ - b) % p_);
    Elem out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_, b /= p_, scale *= p_) out += ((a % p_ + p_ - b % p_) % p_) * scale;
    return out;
}

Elem FieldContext::mul(Elem a, Elem b) const noexcept {
    if (k_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
    Digits da{}, db{};
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_, b /= p_) {
        da[i] = a % p_;
        db[i] = b % p_;
    }
    std::array<std::uint64_t, 2 * kMaxDegree> prod{};
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
    }
    for (std::uint32_t i = 2 * k_ - 2; i >= k_; --i) {
        const std::uint64_t c = prod[i];
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < k_; ++j)
            prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
        prod[i] = 0;
    }
    Elem out = 0;
    for (std::uint32_t i = k_; i-- > 0;) out = out * p_ + static_cast<Elem>(prod[i]);
    return out;
}

Elem FieldContext::inv(Elem a) const {
    require(a != 0 && a < q_, "field: zero has no inverse");
    // a^(q-2)
    Elem acc = 1, base = a;
    for (std::uint64_t e = q_ - 2; e > 0; e >>= 1) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
    }
    return acc;
}

std::vector<std::uint32_t> FieldContext::digits(Elem a) const {
    std::vector<std::uint32_t> d(k_);
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
}

std::string FieldContext::element_to_string(Elem a) const {
    if (k_ == 1) return std::to_string(a);
    auto d = digits(a);
    std::string out;
    for (std::uint32_t i = k_; i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string coef = (d[i] == 1 && i > 0) ? "" : std::to_string(d[i]);
        if (i == 0)
            out += coef;
        else
            out += coef + (i == 1 ? "a" : "a^" + std::to_string(i));
    }
    return out.empty() ? "0" : out;
}

MonicPoly::MonicPoly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    require(field_ != nullptr, "polynomial: missing field");
    require(!coeffs_.empty(), "polynomial: need at least one coefficient");
    require(coeffs_.back() == 1, "polynomial: leading coefficient must be 1");
    for (auto c : coeffs_) require(c < field_->q(), "polynomial: coefficient outside the field");
}

std::string MonicPoly::to_string() const {
    const auto& F = *field_;
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Elem c = coeffs_[i];
        if (c == 0) continue;
        std::string coef;
        if (c != 1 || i == 0) {
            coef = F.element_to_string(c);
            if (F.k() > 1 && (i > 0 || coeffs_.size() > 1)) coef = "(" + coef + ")";
        }
        std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        if (!out.empty()) out += " + ";
        out += coef + mono;
    }
    return out.empty() ? "0" : out;
}

bool is_irreducible_trial(const FieldContext& field, std::span<const Elem> f) {
    validate_monic(field, f);
    const std::size_t n = f.size() - 1;
    const std::uint32_t q = field.q();
    Poly scratch;
    Poly divisor;
    for (std::size_t d = 1; d <= n / 2; ++d) {
        divisor.assign(d + 1, 0);
        divisor[d] = 1;
        // odometer over the d low coefficients
        while (true) {
            scratch.assign(f.begin(), f.end());
            const std::size_t m = d;
            for (std::size_t i = n; i >= m; --i) {
                const Elem c = scratch[i];
                if (c != 0) {
                    for (std::size_t j = 0; j < m; ++j)
                        scratch[i - m + j] = field.sub(scratch[i - m + j], field.mul(c, divisor[j]));
                    scratch[i] = 0;
                }
                if (i == m) break;
            }
            bool zero = std::all_of(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(m),
                                    [](Elem c) { return c == 0; });
            if (zero) return false;
            std::size_t pos = 0;
            while (pos < d && ++divisor[pos] == q) divisor[pos++] = 0;
            if (pos == d) break;
        }
    }
    return true;
}

bool is_irreducible_rabin(const FieldContext& field, std::span<const Elem> f) {
    validate_monic(field, f);
    const std::size_t n = f.size() - 1;
    PolyArith arith(field);
    Poly x_mod_f{0, 1};
    arith.rem_monic(x_mod_f, f);

    // frobenius[i] = x^(q^i) mod f
    std::vector<Poly> frobenius(n + 1);
    frobenius[0] = x_mod_f;
    for (std::size_t i = 1; i <= n; ++i) frobenius[i] = arith.powmod(frobenius[i - 1], field.q(), f);
    if (frobenius[n] != x_mod_f) return false;

    Poly fp(f.begin(), f.end());
    for (auto l : divisors(n)) {
        if (l == 1 || !is_prime(l)) continue;
        Poly g = arith.gcd(fp, arith.sub(frobenius[n / l], x_mod_f));
        if (g.size() != 1) return false;
    }
    return true;
}

bool is_irreducible_trial(const MonicPoly& f) { return is_irreducible_trial(f.field(), f.coeffs()); }
bool is_irreducible_rabin(const MonicPoly& f) { return is_irreducible_rabin(f.field(), f.coeffs()); }

std::uint64_t enumeration_size(const FieldContext& field, std::uint64_t n, std::uint64_t budget) {
    auto total = checked_pow(field.q(), n);
    if (!total || *total > budget)
        fail(Errc::budget_exceeded, "enumerating " + std::to_string(field.q()) + "^" + std::to_string(n) +
                                        " monic polynomials exceeds the enumeration budget of " +
                                        std::to_string(budget));
    return *total;
}

MonicEnumerator::MonicEnumerator(FieldPtr field, std::uint64_t n, std::uint64_t budget)
    : field_(std::move(field)), n_(n) {
    require(field_ != nullptr, "enumerate: missing field");
    require(n >= 1, "enumerate: degree must be >= 1");
    total_ = enumeration_size(*field_, n, budget);
    end_ = total_;
    coeffs_.assign(n + 1, 0);
    coeffs_[n] = 1;
}

MonicEnumerator MonicEnumerator::block(std::uint64_t first, std::uint64_t last) const {
    require(first <= last && last <= total_, "enumerate: block outside [0, q^n)");
    MonicEnumerator out = *this;
    out.rank_ = first;
    out.end_ = last;
    out.started_ = false;
    return out;
}

void MonicEnumerator::seek(std::uint64_t rank) {
    const std::uint32_t q = field_->q();
    // the constant term is the most significant digit
    for (std::uint64_t i = n_; i-- > 0; rank /= q) coeffs_[i] = static_cast<Elem>(rank % q);
}

bool MonicEnumerator::next() {
    if (!started_) {
        started_ = true;
        if (rank_ >= end_) return false;
        seek(rank_);
        return true;
    }
    if (++rank_ >= end_) {
        rank_ = end_;
        return false;
    }
    const std::uint32_t q = field_->q();
    for (std::uint64_t i = n_; i-- > 0;) {
        if (++coeffs_[i] < q) break;
        coeffs_[i] = 0;
    }
    return true;
}

std::uint64_t count_irreducibles(const FieldPtr& field, std::uint64_t n, IrreducibilityTest test,
                                 const CountOptions& options) {
    require(options.budget >= 1, "count: budget must be >= 1");
    MonicEnumerator all(field, n, options.budget);
    const auto total = all.size();
    const std::uint64_t workers = std::clamp<std::uint64_t>(options.workers, 1, std::max<std::uint64_t>(total, 1));

    auto count_block = [&](std::uint64_t first, std::uint64_t last) {
        auto it = all.block(first, last);
        std::uint64_t count = 0;
        while (it.next())
            if (test == IrreducibilityTest::trial ? is_irreducible_trial(*field, it.current())
                                                  : is_irreducible_rabin(*field, it.current()))
                ++count;
        return count;
    };

    if (workers == 1) return count_block(0, total);

    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        const auto first = total * w / workers;
        const auto last = total * (w + 1) / workers;
        threads.emplace_back([&, w, first, last] { partial[w] = count_block(first, last); });
    }
    for (auto& t : threads) t.join();
    std::uint64_t sum = 0;
    for (auto c : partial) sum += c;
    return sum;
}

}  // namespace necklace
