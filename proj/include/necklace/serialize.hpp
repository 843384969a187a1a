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

#ifndef NECKLACE_SERIALIZE_HPP
#define NECKLACE_SERIALIZE_HPP

// JSON documents for every value the library reports. Exact integers are
// written as decimal strings, doubles as shortest round-trip numbers, and
// every top-level document carries a "schema" member (see docs/json.md).

#include <json.hpp>
#include "necklace/exact_arith.hpp"
#include "necklace/finite_field.hpp"
#include "necklace/series.hpp"
#include "necklace/verifier.hpp"

namespace necklace::json {

using nlohmann::json;

json integer(const Integer& v);
json coefficient_array(const std::vector<Integer>& values);

json series(const TruncatedSeries& s, const std::string& method);
json table(const NecklaceTable& t);
json field(const FieldContext& f);
/// Integers for prime fields, arrays of F_p digits for extensions.
json poly_coefficients(const MonicPoly& f);
json poly(const MonicPoly& f);

json symbolic(const SymbolicReport& r);
json numeric(const NumericReport& r);
json bridge(const BridgeReport& r);
json field_count(const FieldContext& f, std::uint64_t n, IrreducibilityTest test, std::uint64_t count);

}  // namespace necklace::json

#endif
