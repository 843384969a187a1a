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

#include "necklace/serialize.hpp"

namespace necklace::json {

namespace {

json complex_value(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json prime_power(const std::optional<PrimePower>& pp) {
    if (!pp) return nullptr;
    return {{"p", pp->p}, {"k", pp->k}};
}

const char* test_name(IrreducibilityTest t) { return t == IrreducibilityTest::trial ? "trial" : "rabin"; }

}  // namespace

json integer(const Integer& v) { return v.get_str(10); }

json coefficient_array(const std::vector<Integer>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(integer(v));
    return out;
}

json series(const TruncatedSeries& s, const std::string& method) {
    return {{"schema", "necklace.series/1"},
            {"method", method},
            {"degree_bound", s.degree_bound()},
            {"coefficients", coefficient_array(s.coeffs())}};
}

json table(const NecklaceTable& t) {
    return {{"schema", "necklace.necklace_table/1"},
            {"base", t.base()},
            {"degree_bound", t.degree_bound()},
            {"values", coefficient_array(t.values())}};
}

json field(const FieldContext& f) {
    return {{"p", f.p()}, {"k", f.k()}, {"q", f.q()}, {"modulus", f.modulus()}};
}

json poly_coefficients(const MonicPoly& f) {
    json out = json::array();
    for (auto c : f.coeffs()) {
        if (f.field().k() == 1)
            out.push_back(c);
        else
            out.push_back(f.field().digits(c));
    }
    return out;
}

json poly(const MonicPoly& f) {
    return {{"schema", "necklace.poly/1"},
            {"field", field(f.field())},
            {"degree", f.degree()},
            {"coefficients", poly_coefficients(f)},
            {"text", f.to_string()}};
}

json symbolic(const SymbolicReport& r) {
    json failure = nullptr;
    if (r.first_failure)
        failure = {{"path", to_string(r.first_failure->path)},
                   {"index", r.first_failure->index},
                   {"expected", integer(r.first_failure->expected)},
                   {"actual", integer(r.first_failure->actual)}};
    return {{"schema", "necklace.symbolic_report/1"},
            {"base", r.base},
            {"degree_bound", r.degree_bound},
            {"pass", r.pass},
            {"cross_checked", r.cross_checked},
            {"paths_agree", r.paths_agree},
            {"first_failure", failure},
            {"prime_power", prime_power(r.prime_power)},
            {"coefficients", coefficient_array(r.coefficients.coeffs())}};
}

json numeric(const NumericReport& r) {
    return {{"schema", "necklace.numeric_report/1"},
            {"base", r.base},
            {"z", complex_value(r.z)},
            {"degree_bound", r.degree_bound},
            {"series_value", complex_value(r.series_value)},
            {"product_value", complex_value(r.product_value)},
            {"target", complex_value(r.target)},
            {"residual", r.residual},
            {"tail_log_bound", r.tail_log_bound},
            {"tail_bound", r.tail_bound},
            {"float_slack", r.float_slack},
            {"pass", r.pass},
            {"prime_power", prime_power(r.prime_power)}};
}

json bridge(const BridgeReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"n", row.n},
                        {"count", integer(Integer(static_cast<unsigned long>(row.count)))},
                        {"necklace", integer(row.necklace)},
                        {"equal", row.equal}});
    return {{"schema", "necklace.bridge_report/1"},
            {"p", r.p},
            {"k", r.k},
            {"q", r.q},
            {"modulus", r.modulus},
            {"test", test_name(r.test)},
            {"rows", rows},
            {"pass", r.pass}};
}

json field_count(const FieldContext& f, std::uint64_t n, IrreducibilityTest test, std::uint64_t count) {
    return {{"schema", "necklace.field_count/1"},
            {"field", field(f)},
            {"n", n},
            {"test", test_name(test)},
            {"count", integer(Integer(static_cast<unsigned long>(count)))}};
}

}  // namespace necklace::json
