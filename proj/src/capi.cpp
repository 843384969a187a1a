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

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "necklace/error.hpp"
#include "necklace/exact_arith.hpp"
#include "necklace/finite_field.hpp"
#include "necklace/serialize.hpp"
#include "necklace/necklace.h"
#include "necklace/series.hpp"
#include "necklace/verifier.hpp"

using namespace necklace;

struct nk_table {
    NecklaceTable table;
    std::vector<std::string> decimals;
    std::string json;
};

struct nk_series {
    TruncatedSeries series;
    std::string method;
    std::vector<std::string> decimals;
    std::string json;
};

struct nk_field {
    FieldPtr field;
    std::string json;
};

struct nk_poly {
    MonicPoly poly;
    std::string text;
    std::string json;
};

struct nk_symbolic_report {
    SymbolicReport report;
    std::string json;
};

struct nk_numeric_report {
    NumericReport report;
    std::string json;
};

struct nk_bridge_report {
    BridgeReport report;
    std::string json;
};

namespace {

thread_local std::string last_error;

nk_status to_status(Errc code) {
    switch (code) {
        case Errc::invalid_argument: return NK_ERR_INVALID_ARGUMENT;
        case Errc::not_prime: return NK_ERR_NOT_PRIME;
        case Errc::budget_exceeded: return NK_ERR_BUDGET_EXCEEDED;
        case Errc::outside_convergence: return NK_ERR_OUTSIDE_CONVERGENCE;
        case Errc::degree_mismatch: return NK_ERR_DEGREE_MISMATCH;
        case Errc::internal: return NK_ERR_INTERNAL;
    }
    return NK_ERR_INTERNAL;
}

template <class F>
nk_status guarded(F&& body) {
    try {
        body();
        return NK_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return NK_ERR_OUT_OF_MEMORY;
    } catch (const std::exception& e) {
        last_error = e.what();
        return NK_ERR_INTERNAL;
    }
}

void not_null(const void* p, const char* what) { require(p != nullptr, std::string(what) + " must not be NULL"); }

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<std::string> decimals_of(const std::vector<Integer>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.get_str(10));
    return out;
}

std::vector<Integer> parse_all(const char* const* text, size_t count) {
    not_null(text, "integer array");
    std::vector<Integer> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        not_null(text[i], "integer string");
        out.push_back(parse_integer(text[i]));
    }
    return out;
}

nk_series* wrap(TruncatedSeries s, std::string method) {
    auto* out = new nk_series{std::move(s), std::move(method), {}, {}};
    out->decimals = decimals_of(out->series.coeffs());
    out->json = json::series(out->series, out->method).dump();
    return out;
}

IrreducibilityTest to_test(nk_irreducibility_test t) {
    require(t == NK_TEST_TRIAL || t == NK_TEST_RABIN, "unknown irreducibility test");
    return t == NK_TEST_TRIAL ? IrreducibilityTest::trial : IrreducibilityTest::rabin;
}

std::uint64_t effective_budget(uint64_t budget) { return budget == 0 ? NK_DEFAULT_ENUMERATION_BUDGET : budget; }

}  // namespace

extern "C" {

const char* nk_version(void) { return "1.0.0"; }

const char* nk_status_name(nk_status status) {
    switch (status) {
        case NK_OK: return "ok";
        case NK_ERR_INVALID_ARGUMENT: return "invalid argument";
        case NK_ERR_NOT_PRIME: return "not prime";
        case NK_ERR_BUDGET_EXCEEDED: return "enumeration budget exceeded";
        case NK_ERR_OUTSIDE_CONVERGENCE: return "outside convergence regime";
        case NK_ERR_DEGREE_MISMATCH: return "degree bound mismatch";
        case NK_ERR_INTERNAL: return "internal error";
        case NK_ERR_OUT_OF_MEMORY: return "out of memory";
    }
    return "unknown status";
}

const char* nk_last_error(void) { return last_error.c_str(); }

void nk_string_free(char* s) { std::free(s); }

nk_status nk_mobius(uint64_t n, int* out) {
    return guarded([&] {
        not_null(out, "out");
        *out = mobius(n);
    });
}

nk_status nk_divisors(uint64_t n, uint64_t* out, size_t capacity, size_t* count) {
    return guarded([&] {
        not_null(count, "count");
        const auto d = divisors(n);
        *count = d.size();
        if (out == nullptr) return;
        std::copy_n(d.begin(), std::min(capacity, d.size()), out);
    });
}

nk_status nk_necklace_count(uint64_t a, uint64_t n, char** out) {
    return guarded([&] {
        not_null(out, "out");
        *out = duplicate(necklace_count(a, n).get_str(10));
    });
}

nk_status nk_table_build(uint64_t a, uint64_t degree, nk_table** out) {
    return guarded([&] {
        not_null(out, "out");
        auto* t = new nk_table{build_necklace_table(a, degree), {}, {}};
        t->decimals = decimals_of(t->table.values());
        t->json = json::table(t->table).dump();
        *out = t;
    });
}

void nk_table_free(nk_table* table) { delete table; }
uint64_t nk_table_base(const nk_table* table) { return table ? table->table.base() : 0; }
uint64_t nk_table_degree(const nk_table* table) { return table ? table->table.degree_bound() : 0; }

const char* nk_table_value(const nk_table* table, uint64_t n) {
    if (!table || n < 1 || n > table->decimals.size()) return nullptr;
    return table->decimals[n - 1].c_str();
}

const char* nk_table_json(const nk_table* table) { return table ? table->json.c_str() : nullptr; }

nk_status nk_series_from_coefficients(const char* const* coefficients, size_t count, nk_series** out) {
    return guarded([&] {
        not_null(out, "out");
        *out = wrap(TruncatedSeries(parse_all(coefficients, count)), "literal");
    });
}

nk_status nk_series_mul(const nk_series* x, const nk_series* y, nk_series** out) {
    return guarded([&] {
        not_null(x, "x");
        not_null(y, "y");
        not_null(out, "out");
        *out = wrap(series_mul(x->series, y->series), "product");
    });
}

nk_status nk_series_binomial_factor(uint64_t n, const char* e, uint64_t degree, nk_series** out) {
    return guarded([&] {
        not_null(e, "e");
        not_null(out, "out");
        *out = wrap(binomial_factor(n, parse_integer(e), degree), "binomial");
    });
}

namespace {

nk_series* expand(const ExponentSpec& spec, nk_method method) {
    require(method == NK_METHOD_RECURSIVE || method == NK_METHOD_DIRECT, "unknown expansion method");
    if (method == NK_METHOD_RECURSIVE) return wrap(expand_recursive(spec), "recursive");
    return wrap(expand_direct(spec), "direct");
}

}  // namespace

nk_status nk_expand_necklace(uint64_t a, uint64_t degree, nk_method method, nk_series** out) {
    return guarded([&] {
        not_null(out, "out");
        *out = expand(ExponentSpec::necklace_spec(build_necklace_table(a, degree)), method);
    });
}

nk_status nk_expand_exponents(const char* const* exponents, size_t count, nk_method method, nk_series** out) {
    return guarded([&] {
        not_null(out, "out");
        *out = expand(ExponentSpec(parse_all(exponents, count)), method);
    });
}

void nk_series_free(nk_series* s) { delete s; }
uint64_t nk_series_degree(const nk_series* s) { return s ? s->series.degree_bound() : 0; }

const char* nk_series_coefficient(const nk_series* s, uint64_t j) {
    if (!s || j >= s->decimals.size()) return nullptr;
    return s->decimals[j].c_str();
}

int nk_series_equal(const nk_series* x, const nk_series* y) { return x && y && x->series == y->series; }

nk_status nk_series_eval(const nk_series* s, double re, double im, double* out_re, double* out_im) {
    return guarded([&] {
        not_null(s, "series");
        not_null(out_re, "out_re");
        not_null(out_im, "out_im");
        const auto v = eval_complex(s->series, {re, im});
        *out_re = v.real();
        *out_im = v.imag();
    });
}

const char* nk_series_json(const nk_series* s) { return s ? s->json.c_str() : nullptr; }

namespace {

nk_field* wrap(FieldPtr f) {
    auto* out = new nk_field{std::move(f), {}};
    auto doc = json::field(*out->field);
    doc["schema"] = "necklace.field/1";
    out->json = doc.dump();
    return out;
}

}  // namespace

nk_status nk_field_build(uint64_t p, uint64_t k, nk_field** out) {
    return guarded([&] {
        not_null(out, "out");
        *out = wrap(FieldContext::build(p, k));
    });
}

nk_status nk_field_with_modulus(uint64_t p, const uint32_t* modulus, size_t length, nk_field** out) {
    return guarded([&] {
        not_null(modulus, "modulus");
        not_null(out, "out");
        *out = wrap(FieldContext::with_modulus(p, std::vector<std::uint32_t>(modulus, modulus + length)));
    });
}

void nk_field_free(nk_field* field) { delete field; }
uint32_t nk_field_p(const nk_field* field) { return field ? field->field->p() : 0; }
uint32_t nk_field_k(const nk_field* field) { return field ? field->field->k() : 0; }
uint32_t nk_field_q(const nk_field* field) { return field ? field->field->q() : 0; }
const char* nk_field_json(const nk_field* field) { return field ? field->json.c_str() : nullptr; }

nk_status nk_poly_create(const nk_field* field, const uint32_t* coefficients, size_t length, nk_poly** out) {
    return guarded([&] {
        not_null(field, "field");
        not_null(coefficients, "coefficients");
        not_null(out, "out");
        MonicPoly poly(field->field, std::vector<Elem>(coefficients, coefficients + length));
        auto text = poly.to_string();
        auto doc = json::poly(poly).dump();
        *out = new nk_poly{std::move(poly), std::move(text), std::move(doc)};
    });
}

void nk_poly_free(nk_poly* poly) { delete poly; }
uint64_t nk_poly_degree(const nk_poly* poly) { return poly ? poly->poly.degree() : 0; }
const char* nk_poly_string(const nk_poly* poly) { return poly ? poly->text.c_str() : nullptr; }
const char* nk_poly_json(const nk_poly* poly) { return poly ? poly->json.c_str() : nullptr; }

nk_status nk_poly_is_irreducible(const nk_poly* poly, nk_irreducibility_test test, int* out) {
    return guarded([&] {
        not_null(poly, "poly");
        not_null(out, "out");
        *out = to_test(test) == IrreducibilityTest::trial ? is_irreducible_trial(poly->poly)
                                                          : is_irreducible_rabin(poly->poly);
    });
}

nk_status nk_enumerate_monic(const nk_field* field, uint64_t n, uint64_t budget, uint64_t first, uint64_t last,
                             nk_poly_visitor visit, void* user) {
    return guarded([&] {
        not_null(field, "field");
        require(visit != nullptr, "visitor must not be NULL");
        MonicEnumerator all(field->field, n, effective_budget(budget));
        auto it = all.block(first, last == UINT64_MAX ? all.size() : last);
        while (it.next()) {
            const auto c = it.current();
            if (visit(c.data(), c.size(), user) != 0) break;
        }
    });
}

nk_status nk_count_irreducibles(const nk_field* field, uint64_t n, nk_irreducibility_test test, uint64_t budget,
                                unsigned workers, uint64_t* out) {
    return guarded([&] {
        not_null(field, "field");
        not_null(out, "out");
        *out = count_irreducibles(field->field, n, to_test(test), {effective_budget(budget), workers});
    });
}

nk_status nk_count_irreducibles_json(const nk_field* field, uint64_t n, nk_irreducibility_test test, uint64_t budget,
                                     unsigned workers, char** out) {
    return guarded([&] {
        not_null(field, "field");
        not_null(out, "out");
        const auto t = to_test(test);
        const auto count = count_irreducibles(field->field, n, t, {effective_budget(budget), workers});
        *out = duplicate(json::field_count(*field->field, n, t, count).dump());
    });
}

nk_status nk_verify_symbolic(uint64_t a, uint64_t degree, int cross_check, nk_symbolic_report** out) {
    return guarded([&] {
        not_null(out, "out");
        auto report = verify_symbolic(a, degree, cross_check != 0);
        auto doc = json::symbolic(report).dump();
        *out = new nk_symbolic_report{std::move(report), std::move(doc)};
    });
}

void nk_symbolic_report_free(nk_symbolic_report* report) { delete report; }
int nk_symbolic_report_pass(const nk_symbolic_report* report) { return report && report->report.pass; }
const char* nk_symbolic_report_json(const nk_symbolic_report* report) {
    return report ? report->json.c_str() : nullptr;
}

nk_status nk_tail_log_bound(uint64_t a, double rho, uint64_t degree, double* out) {
    return guarded([&] {
        not_null(out, "out");
        *out = tail_log_bound(a, rho, degree);
    });
}

nk_status nk_verify_numeric(uint64_t a, double re, double im, uint64_t degree, nk_numeric_report** out) {
    return guarded([&] {
        not_null(out, "out");
        auto report = verify_numeric(a, {re, im}, degree);
        auto doc = json::numeric(report).dump();
        *out = new nk_numeric_report{std::move(report), std::move(doc)};
    });
}

void nk_numeric_report_free(nk_numeric_report* report) { delete report; }
int nk_numeric_report_pass(const nk_numeric_report* report) { return report && report->report.pass; }
double nk_numeric_report_residual(const nk_numeric_report* report) { return report ? report->report.residual : 0.0; }
double nk_numeric_report_tail_bound(const nk_numeric_report* report) {
    return report ? report->report.tail_bound : 0.0;
}
double nk_numeric_report_float_slack(const nk_numeric_report* report) {
    return report ? report->report.float_slack : 0.0;
}
const char* nk_numeric_report_json(const nk_numeric_report* report) { return report ? report->json.c_str() : nullptr; }

nk_status nk_verify_bridge(uint64_t p, uint64_t k, uint64_t n_max, nk_irreducibility_test test, uint64_t budget,
                           unsigned workers, nk_bridge_report** out) {
    return guarded([&] {
        not_null(out, "out");
        auto report = verify_count_bridge(p, k, n_max, {to_test(test), {effective_budget(budget), workers}});
        auto doc = json::bridge(report).dump();
        *out = new nk_bridge_report{std::move(report), std::move(doc)};
    });
}

void nk_bridge_report_free(nk_bridge_report* report) { delete report; }
int nk_bridge_report_pass(const nk_bridge_report* report) { return report && report->report.pass; }
const char* nk_bridge_report_json(const nk_bridge_report* report) { return report ? report->json.c_str() : nullptr; }

}  // extern "C"
