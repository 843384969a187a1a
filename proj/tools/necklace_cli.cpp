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

// Command-line front end. Talks to the library only through necklace.h.
//
// Exit status: 0 success or all checks passed, 1 a check failed,
// 2 usage error (bad flags, invalid arguments, refused enumeration).

#include <CLI11.hpp>
#include <charconv>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "necklace/necklace.h"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommandConfig {
    bool json = false;
    bool quiet = false;
    std::uint64_t budget = NK_DEFAULT_ENUMERATION_BUDGET;
    unsigned workers = 1;
};

// Raised for anything that should end the process with status 2.
struct UsageError {
    std::string message;
};

void check(nk_status status) {
    if (status == NK_OK) return;
    // internal errors are not the caller's fault
    if (status == NK_ERR_INTERNAL || status == NK_ERR_OUT_OF_MEMORY) {
        std::cerr << "error: " << nk_status_name(status) << ": " << nk_last_error() << "\n";
        std::exit(kExitFail);
    }
    throw UsageError{std::string(nk_status_name(status)) + ": " + nk_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};

template <class T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Free>>;

using SeriesHandle = Handle<nk_series, nk_series_free>;
using TableHandle = Handle<nk_table, nk_table_free>;
using FieldHandle = Handle<nk_field, nk_field_free>;
using SymbolicHandle = Handle<nk_symbolic_report, nk_symbolic_report_free>;
using NumericHandle = Handle<nk_numeric_report, nk_numeric_report_free>;
using BridgeHandle = Handle<nk_bridge_report, nk_bridge_report_free>;

std::string take(char* s) {
    std::string out(s);
    nk_string_free(s);
    return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) parts.push_back(part);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

double parse_double(const std::string& text) {
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || text.empty()) throw UsageError{"not a decimal number: '" + text + "'"};
    return v;
}

std::pair<double, double> parse_complex(const std::string& text) {
    auto parts = split(text, ',');
    if (parts.size() != 2) throw UsageError{"--z expects RE,IM (two decimal numbers), got '" + text + "'"};
    return {parse_double(parts[0]), parse_double(parts[1])};
}

nk_method parse_method(const std::string& m) { return m == "direct" ? NK_METHOD_DIRECT : NK_METHOD_RECURSIVE; }
nk_irreducibility_test parse_test(const std::string& t) { return t == "trial" ? NK_TEST_TRIAL : NK_TEST_RABIN; }

std::string complex_text(const json& z) {
    std::ostringstream out;
    out << std::setprecision(17) << z[0].get<double>() << (z[1].get<double>() < 0 ? " - " : " + ")
        << std::abs(z[1].get<double>()) << "i";
    return out.str();
}

std::string real_text(double v) {
    std::ostringstream out;
    out << std::setprecision(6) << v;
    return out.str();
}

// Two-column key/value rendering for text mode.
void print_rows(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) std::cout << std::left << std::setw(static_cast<int>(width + 2)) << k << v << "\n";
}

std::string join(const json& values, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += values[i].is_string() ? values[i].get<std::string>() : values[i].dump();
    }
    return out;
}

class Cli {
   public:
    int run(int argc, char** argv);

   private:
    void emit(const json& doc, const std::function<void()>& text);

    int do_mobius();
    int do_necklace();
    int do_necklace_table();
    int do_expand();
    int do_expand_raw();
    int do_field_count();
    int do_verify_symbolic();
    int do_verify_numeric();
    int do_verify_bridge();
    int print_series(const SeriesHandle& s);

    CommandConfig config_;
    std::uint64_t n_ = 0, a_ = 0, degree_ = 0, p_ = 0, k_ = 1, n_max_ = 0;
    std::string method_ = "recursive", test_ = "rabin", exponents_, z_;
    bool cross_check_ = false;
};

void Cli::emit(const json& doc, const std::function<void()>& text) {
    if (config_.quiet) return;
    if (config_.json)
        std::cout << doc.dump() << "\n";
    else
        text();
}

int Cli::do_mobius() {
    int mu = 0;
    check(nk_mobius(n_, &mu));
    emit({{"schema", "necklace.mobius/1"}, {"n", n_}, {"mu", mu}}, [&] { std::cout << mu << "\n"; });
    return kExitPass;
}

int Cli::do_necklace() {
    char* raw = nullptr;
    check(nk_necklace_count(a_, n_, &raw));
    auto value = take(raw);
    emit({{"schema", "necklace.necklace_count/1"}, {"a", a_}, {"n", n_}, {"value", value}},
         [&] { std::cout << value << "\n"; });
    return kExitPass;
}

int Cli::do_necklace_table() {
    nk_table* raw = nullptr;
    check(nk_table_build(a_, degree_, &raw));
    TableHandle table(raw);
    emit(json::parse(nk_table_json(table.get())), [&] {
        const std::string head = "N(" + std::to_string(a_) + ",n)";
        std::cout << std::right << std::setw(6) << "n" << "  " << head << "\n";
        for (std::uint64_t n = 1; n <= degree_; ++n)
            std::cout << std::setw(6) << n << "  " << nk_table_value(table.get(), n) << "\n";
    });
    return kExitPass;
}

int Cli::print_series(const SeriesHandle& s) {
    auto doc = json::parse(nk_series_json(s.get()));
    emit(doc, [&] { std::cout << join(doc["coefficients"]) << "\n"; });
    return kExitPass;
}

int Cli::do_expand() {
    nk_series* raw = nullptr;
    check(nk_expand_necklace(a_, degree_, parse_method(method_), &raw));
    return print_series(SeriesHandle(raw));
}

int Cli::do_expand_raw() {
    auto parts = split(exponents_, ',');
    std::vector<const char*> ptrs;
    for (const auto& p : parts) ptrs.push_back(p.c_str());
    nk_series* raw = nullptr;
    check(nk_expand_exponents(ptrs.data(), ptrs.size(), parse_method(method_), &raw));
    return print_series(SeriesHandle(raw));
}

int Cli::do_field_count() {
    nk_field* raw = nullptr;
    check(nk_field_build(p_, k_, &raw));
    FieldHandle field(raw);
    char* doc_raw = nullptr;
    check(nk_count_irreducibles_json(field.get(), n_, parse_test(test_), config_.budget, config_.workers, &doc_raw));
    auto doc = json::parse(take(doc_raw));
    emit(doc, [&] { std::cout << doc["count"].get<std::string>() << "\n"; });
    return kExitPass;
}

int Cli::do_verify_symbolic() {
    nk_symbolic_report* raw = nullptr;
    check(nk_verify_symbolic(a_, degree_, cross_check_ ? 1 : 0, &raw));
    SymbolicHandle report(raw);
    auto doc = json::parse(nk_symbolic_report_json(report.get()));
    emit(doc, [&] {
        std::vector<std::pair<std::string, std::string>> rows{
            {"check", "symbolic"},
            {"a", std::to_string(a_)},
            {"degree bound", std::to_string(degree_)},
            {"cross-check", doc["cross_checked"].get<bool>() ? "yes" : "no"},
            {"coefficients", join(doc["coefficients"])},
        };
        if (doc["cross_checked"].get<bool>())
            rows.emplace_back("paths agree", doc["paths_agree"].get<bool>() ? "yes" : "no");
        if (!doc["first_failure"].is_null()) {
            const auto& f = doc["first_failure"];
            rows.emplace_back("first failure", f["path"].get<std::string>() + " z^" + f["index"].dump() +
                                                   ": expected " + f["expected"].get<std::string>() + ", got " +
                                                   f["actual"].get<std::string>());
        }
        rows.emplace_back("result", doc["pass"].get<bool>() ? "PASS" : "FAIL");
        print_rows(rows);
    });
    return nk_symbolic_report_pass(report.get()) ? kExitPass : kExitFail;
}

int Cli::do_verify_numeric() {
    auto [re, im] = parse_complex(z_);
    nk_numeric_report* raw = nullptr;
    check(nk_verify_numeric(a_, re, im, degree_, &raw));
    NumericHandle report(raw);
    auto doc = json::parse(nk_numeric_report_json(report.get()));
    emit(doc, [&] {
        print_rows({
            {"check", "numeric"},
            {"a", std::to_string(a_)},
            {"z", complex_text(doc["z"])},
            {"degree bound", std::to_string(degree_)},
            {"series value", complex_text(doc["series_value"])},
            {"product value", complex_text(doc["product_value"])},
            {"target 1 - a z", complex_text(doc["target"])},
            {"residual", real_text(doc["residual"].get<double>())},
            {"tail bound", real_text(doc["tail_bound"].get<double>())},
            {"float slack", real_text(doc["float_slack"].get<double>())},
            {"result", doc["pass"].get<bool>() ? "PASS" : "FAIL"},
        });
    });
    return nk_numeric_report_pass(report.get()) ? kExitPass : kExitFail;
}

int Cli::do_verify_bridge() {
    nk_bridge_report* raw = nullptr;
    check(nk_verify_bridge(p_, k_, n_max_, parse_test(test_), config_.budget, config_.workers, &raw));
    BridgeHandle report(raw);
    auto doc = json::parse(nk_bridge_report_json(report.get()));
    emit(doc, [&] {
        std::cout << "F_" << doc["q"].get<std::uint64_t>() << " (p = " << p_ << ", k = " << k_
                  << ", modulus " << join(doc["modulus"], " ") << "), " << doc["test"].get<std::string>()
                  << " test\n";
        std::cout << std::right << std::setw(4) << "n" << std::setw(14) << "count" << std::setw(14) << "N(q,n)"
                  << "  equal\n";
        for (const auto& row : doc["rows"])
            std::cout << std::setw(4) << row["n"].get<std::uint64_t>() << std::setw(14)
                      << row["count"].get<std::string>() << std::setw(14) << row["necklace"].get<std::string>()
                      << "  " << (row["equal"].get<bool>() ? "yes" : "NO") << "\n";
        std::cout << "result  " << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    });
    return nk_bridge_report_pass(report.get()) ? kExitPass : kExitFail;
}

int Cli::run(int argc, char** argv) {
    CLI::App app{"Necklace counts, Euler product expansions and irreducible polynomial counts", "necklace"};
    app.fallthrough();
    app.require_subcommand(1, 1);
    app.add_flag("--json", config_.json, "Machine-readable JSON output");
    app.add_flag("--quiet", config_.quiet, "Print nothing; report through the exit status only");

    const auto positive = CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max());

    auto* mobius = app.add_subcommand("mobius", "Möbius function mu(n)");
    mobius->add_option("--n", n_, "Argument n >= 1")->required();

    auto* necklace = app.add_subcommand("necklace", "Necklace count N(a, n)");
    necklace->require_subcommand(0, 1);
    auto* necklace_a = necklace->add_option("--a", a_, "Base a >= 1");
    auto* necklace_n = necklace->add_option("--n", n_, "Length n >= 1");
    auto* table = necklace->add_subcommand("table", "Table of N(a, 1..D)");
    table->add_option("--a", a_, "Base a >= 1")->required();
    table->add_option("--degree", degree_, "Degree bound D >= 1")->required();

    auto* expand = app.add_subcommand("expand", "Coefficients of prod (1 - z^n)^N(a,n) mod z^(D+1)");
    expand->require_subcommand(0, 1);
    auto* expand_a = expand->add_option("--a", a_, "Base a >= 1");
    auto* expand_degree = expand->add_option("--degree", degree_, "Degree bound D >= 1");
    expand->add_option("--method", method_, "Expansion path")->check(CLI::IsMember({"recursive", "direct"}));
    auto* raw = expand->add_subcommand("raw", "Coefficients of prod (1 - z^n)^e(n) for given exponents");
    raw->add_option("--exponents", exponents_, "Comma separated integers e(1),...,e(D)")->required();
    raw->add_option("--method", method_, "Expansion path")->check(CLI::IsMember({"recursive", "direct"}));

    auto* field = app.add_subcommand("field", "Finite field computations");
    field->require_subcommand(1, 1);
    auto* count = field->add_subcommand("count", "Count monic irreducibles of degree n over F_(p^k)");
    count->add_option("--p", p_, "Prime p")->required();
    count->add_option("--k", k_, "Extension degree k >= 1")->required();
    count->add_option("--n", n_, "Polynomial degree n >= 1")->required();
    count->add_option("--test", test_, "Irreducibility test")->check(CLI::IsMember({"trial", "rabin"}));
    count->add_option("--budget", config_.budget, "Enumeration budget (polynomials)")->check(positive);
    count->add_option("--workers", config_.workers, "Worker threads")->check(CLI::Range(1u, 1024u));

    auto* verify = app.add_subcommand("verify", "Check the product identity");
    verify->require_subcommand(1, 1);
    auto* symbolic = verify->add_subcommand("symbolic", "Exact coefficient check up to z^D");
    symbolic->add_option("--a", a_, "Base a >= 1")->required();
    symbolic->add_option("--degree", degree_, "Degree bound D >= 1")->required();
    symbolic->add_flag("--cross-check", cross_check_, "Also expand by direct multiplication");
    auto* numeric = verify->add_subcommand("numeric", "Floating point check with a rigorous tail bound");
    numeric->add_option("--a", a_, "Base a >= 2")->required();
    numeric->add_option("--z", z_, "Evaluation point RE,IM")->required();
    numeric->add_option("--degree", degree_, "Degree bound D >= 1")->required();
    auto* bridge = verify->add_subcommand("bridge", "Brute-force irreducible counts against N(p^k, n)");
    bridge->add_option("--p", p_, "Prime p")->required();
    bridge->add_option("--k", k_, "Extension degree k >= 1")->required();
    bridge->add_option("--n-max", n_max_, "Largest degree n")->required();
    bridge->add_option("--test", test_, "Irreducibility test")->check(CLI::IsMember({"trial", "rabin"}));
    bridge->add_option("--budget", config_.budget, "Enumeration budget (polynomials)")->check(positive);
    bridge->add_option("--workers", config_.workers, "Worker threads")->check(CLI::Range(1u, 1024u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    auto missing = [](CLI::Option* opt) { return opt->count() == 0; };
    try {
        if (*mobius) return do_mobius();
        if (*table) return do_necklace_table();
        if (*necklace) {
            if (missing(necklace_a) || missing(necklace_n)) throw UsageError{"necklace requires --a and --n"};
            return do_necklace();
        }
        if (*raw) return do_expand_raw();
        if (*expand) {
            if (missing(expand_a) || missing(expand_degree)) throw UsageError{"expand requires --a and --degree"};
            return do_expand();
        }
        if (*count) return do_field_count();
        if (*symbolic) return do_verify_symbolic();
        if (*numeric) return do_verify_numeric();
        if (*bridge) return do_verify_bridge();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << "\n\n" << app.help();
        return kExitUsage;
    }
    std::cerr << app.help();
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return Cli().run(argc, argv); }
