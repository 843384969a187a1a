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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "necklace/serialize.hpp"

using namespace necklace;
using Json = nlohmann::json;

TEST_CASE("exact integers are decimal strings") {
    auto t = build_necklace_table(10, 64);
    auto doc = Json::parse(necklace::json::table(t).dump());
    CHECK(doc["schema"] == "necklace.necklace_table/1");
    CHECK(doc["values"][63].get<std::string>() == t[64].get_str());
    CHECK(doc["values"][63].get<std::string>().size() > 20);
}

TEST_CASE("series documents") {
    auto s = expand_recursive(ExponentSpec::necklace_spec(build_necklace_table(2, 4)));
    auto doc = necklace::json::series(s, "recursive");
    CHECK(doc.dump() ==
          R"({"coefficients":["1","-2","0","0","0"],"degree_bound":4,"method":"recursive","schema":"necklace.series/1"})");
}

TEST_CASE("doubles round-trip through the numeric report") {
    auto r = verify_numeric(3, {0.1, 0.1}, 50);
    auto doc = Json::parse(necklace::json::numeric(r).dump());
    CHECK(doc["schema"] == "necklace.numeric_report/1");
    CHECK(doc["residual"].get<double>() == r.residual);
    CHECK(doc["tail_bound"].get<double>() == r.tail_bound);
    CHECK(doc["float_slack"].get<double>() == r.float_slack);
    CHECK(doc["product_value"][0].get<double>() == r.product_value.real());
    CHECK(doc["product_value"][1].get<double>() == r.product_value.imag());
    CHECK(doc["z"][1].get<double>() == 0.1);
}

TEST_CASE("bridge and field documents") {
    auto r = verify_count_bridge(2, 2, 3);
    auto doc = necklace::json::bridge(r);
    CHECK(doc["schema"] == "necklace.bridge_report/1");
    CHECK(doc["modulus"] == Json::parse("[1,1,1]"));
    CHECK(doc["rows"][1]["count"] == "6");
    CHECK(doc["rows"][1]["necklace"] == "6");
    CHECK(doc["test"] == "rabin");

    auto f = FieldContext::build(3, 2);
    auto count = necklace::json::field_count(*f, 2, IrreducibilityTest::trial, 36);
    CHECK(count["field"]["q"] == 9);
    CHECK(count["count"] == "36");
}

TEST_CASE("symbolic document carries the prime power") {
    auto doc = necklace::json::symbolic(verify_symbolic(27, 5));
    CHECK(doc["prime_power"]["p"] == 3);
    CHECK(doc["prime_power"]["k"] == 3);
    CHECK(doc["first_failure"].is_null());
    CHECK(necklace::json::symbolic(verify_symbolic(6, 5))["prime_power"].is_null());
}
