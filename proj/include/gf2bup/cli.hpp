/*
   Copyright 2026 The gf2bup Authors

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

#ifndef GF2BUP_CLI_HPP
#define GF2BUP_CLI_HPP

// Command-line front end. Kept in a header so tests can drive it with
// string streams; tools/gf2bup.cpp only forwards argv.
//
// Exit statuses: 0 success / verified, 1 verification failure, 2 usage or
// parse error.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "divisor_sums.hpp"
#include "factor.hpp"
#include "mersenne.hpp"
#include "poly.hpp"
#include "search.hpp"

namespace gf2bup::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Factored form with M1..M5 written by name.
inline std::string format_aliased(const Factorization& f) {
    if (f.factors().empty()) return "1";
    std::string out;
    for (const auto& pp : f.factors()) {
        if (!out.empty()) out.push_back('*');
        if (auto i = in_M5_set(pp.base)) {
            out += "M" + std::to_string(*i);
        } else {
            const std::string base = format(pp.base);
            out += pp.base.weight() == 1 ? base : "(" + base + ")";
        }
        if (pp.exp != 1) out += "^" + std::to_string(pp.exp);
    }
    return out;
}

struct CatalogCheck {
    bool fixpoint = false;
    bool even = false;
    bool mersenne_only = false;
    bool indecomposable = false;

    bool ok() const { return fixpoint && even && mersenne_only && indecomposable; }

    std::string failures() const {
        std::string s;
        auto add = [&](bool good, const char* what) {
            if (!good) s += (s.empty() ? "" : ",") + std::string(what);
        };
        add(fixpoint, "not-fixpoint");
        add(even, "x(x+1)-does-not-divide");
        add(mersenne_only, "odd-prime-outside-M");
        add(indecomposable, "decomposable");
        return s;
    }
};

inline CatalogCheck check_catalog_member(const Gf2Poly& p) {
    CatalogCheck c;
    c.fixpoint = !p.is_zero() && is_bup(p);
    c.even = !p.is_zero() && divides(Gf2Poly::from_uint(0b110), p);
    if (c.fixpoint) {
        c.mersenne_only = reduction_check(p);
        c.indecomposable = is_indecomposable_bup(p);
    }
    return c;
}

/// Checks each entry and its conjugate; one line per entry.
inline int verify_catalog(std::span<const CandidateTuple> entries, bool records, std::ostream& out) {
    std::size_t passed = 0;
    for (std::size_t j = 0; j < entries.size(); ++j) {
        const Gf2Poly p = entries[j].expand();
        const Gf2Poly q = conjugate(p);
        const CatalogCheck cp = check_catalog_member(p);
        const CatalogCheck cq = check_catalog_member(q);
        const bool ok = cp.ok() && cq.ok();
        passed += ok ? 1 : 0;
        const std::string name = "C" + std::to_string(j + 1);
        std::string why;
        if (!cp.ok()) why += "entry:" + cp.failures();
        if (!cq.ok()) why += std::string(why.empty() ? "" : " ") + "conjugate:" + cq.failures();
        if (records) {
            out << name << '\t' << (ok ? "PASS" : "FAIL") << '\t' << format_factored(factorize(p)) << '\t'
                << format_factored(factorize(q)) << (ok ? "" : "\t" + why) << '\n';
        } else {
            out << std::left << std::setw(4) << name << ' ' << (ok ? "PASS" : "FAIL") << "  "
                << format_aliased(factorize(p)) << "   conjugate " << format_aliased(factorize(q))
                << (ok ? "" : "   " + why) << '\n';
        }
    }
    if (!records) out << passed << "/" << entries.size() << " catalog entries verified\n";
    return passed == entries.size() ? kExitOk : kExitFailed;
}

namespace detail {

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

// Parses a polynomial argument; on failure prints a caret diagnostic.
inline std::optional<Gf2Poly> read_poly(const std::string& text, Streams io) {
    try {
        return parse(text);
    } catch (const ParseError& e) {
        io.err << "error: " << e.what() << '\n' << "  " << text << '\n'
               << "  " << std::string(std::min(e.position(), text.size()), ' ') << "^\n";
        return std::nullopt;
    }
}

inline std::string catalog_column(const BupRecord& r) {
    return r.catalog_index ? std::to_string(*r.catalog_index) : "-";
}

inline int run_search_command(const std::string& case_text, unsigned workers, bool records, bool full_expansion,
                              Streams io) {
    std::vector<CaseTag> cases;
    if (case_text == "all") {
        cases.assign(kAllCases.begin(), kAllCases.end());
    } else if (auto tag = parse_case_tag(case_text)) {
        cases.push_back(*tag);
    } else {
        io.err << "error: unknown case '" << case_text << "'\n";
        return kExitUsage;
    }

    SearchOptions options;
    options.workers = workers;
    options.force_full_expansion = full_expansion;
    const SearchReport report = run_search(cases, options);

    for (const auto& r : report.records) {
        io.out << to_string(*r.case_tag) << '\t' << (r.tuple ? r.tuple->to_string() : "-") << '\t'
               << format_factored(r.factorization) << '\t' << catalog_column(r);
        if (!records) io.out << '\t' << r.conjugate_class << ' ' << format_aliased(r.factorization);
        io.out << '\n';
    }

    std::set<std::string> found;
    for (const auto& r : report.records) found.insert(r.conjugate_class);
    std::set<std::string> expected;
    for (CaseTag tag : cases) {
        for (unsigned j : expected_catalog_classes(tag)) expected.insert("C" + std::to_string(j));
    }
    // Every record must be a catalog member or a catalog member's conjugate.
    std::size_t closure = 0;
    for (const auto& r : report.records) closure += catalog_class_of(r.poly) ? 1 : 0;
    const bool ok = found == expected && closure == report.records.size();

    const char* prefix = records ? "# " : "";
    for (const auto& c : report.cases) {
        const auto original = candidate_tuples(c.tag, CandidateProfile::original_sets).size();
        io.out << prefix << "case " << to_string(c.tag) << ": " << c.candidates << " candidates (" << original
               << " with the original exponent sets), " << c.hits << " hits before conjugation\n";
    }
    io.out << prefix << "conjugate classes: " << found.size() << " found, " << expected.size() << " expected; "
           << report.records.size() << " polynomials\n";
    io.out << prefix << "wall time: " << std::fixed << std::setprecision(3) << report.seconds << " s\n";
    io.out << prefix << (ok ? "RESULT OK" : "RESULT MISMATCH") << '\n';
    return ok ? kExitOk : kExitFailed;
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Divisor sums over GF(2)[x] and the bi-unitary perfect polynomial search", "gf2bup"};
    app.require_subcommand(1, 1);

    bool records = false;
    std::uint64_t seed = kDefaultFactorSeed;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::string case_text;
    std::optional<unsigned> max_degree;
    bool full_expansion = false;
    std::string poly_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--records", records, "Machine-readable output, no aliases");
        sub->add_option("--seed", seed, "Seed for randomized factor splitting");
    };
    auto add_poly_command = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("poly", poly_text, "Polynomial in x")->required();
        add_common(sub);
        return sub;
    };

    CLI::App* factor_cmd = add_poly_command("factor", "Factor a polynomial into irreducibles");
    CLI::App* sigma_cmd = add_poly_command("sigma", "Sum of all divisors");
    CLI::App* sigma_star_cmd = add_poly_command("sigma-star", "Sum of unitary divisors");
    CLI::App* sigma_2star_cmd = add_poly_command("sigma-2star", "Sum of bi-unitary divisors");

    CLI::App* verify_cmd = app.add_subcommand("verify-catalog", "Check C1..C23 and their conjugates");
    add_common(verify_cmd);

    CLI::App* search_cmd = app.add_subcommand("search", "Run the exhaustive candidate search");
    search_cmd->add_option("case,--case", case_text, "even-even | even-odd | odd-even | odd-odd | all");
    search_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    search_cmd->add_flag("--full-expansion", full_expansion, "Expand every candidate instead of comparing exponents");
    add_common(search_cmd);

    CLI::App* mersenne_cmd = app.add_subcommand("mersenne", "List Mersenne primes up to a degree");
    mersenne_cmd->add_option("max_degree,--max-degree", max_degree, "Degree bound");
    add_common(mersenne_cmd);

    CLI::App* scan_cmd = app.add_subcommand("scan", "Brute-force all fixpoints up to a degree (<= 20)");
    scan_cmd->add_option("max_degree,--max-degree", max_degree, "Degree bound");
    scan_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    add_common(scan_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o;
        std::ostringstream e_stream;
        const int code = app.exit(e, o, e_stream);
        out << o.str();
        err << e_stream.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    const detail::Streams io{out, err};
    try {
        if (factor_cmd->parsed() || sigma_cmd->parsed() || sigma_star_cmd->parsed() || sigma_2star_cmd->parsed()) {
            const auto p = detail::read_poly(poly_text, io);
            if (!p) return kExitUsage;
            if (p->is_zero()) {
                err << "error: the zero polynomial has no factorization or divisor sum\n";
                return kExitUsage;
            }
            const Factorization f = factorize(*p, seed);
            Gf2Poly result = *p;
            if (sigma_cmd->parsed()) result = sigma(f);
            if (sigma_star_cmd->parsed()) result = sigma_star(f);
            if (sigma_2star_cmd->parsed()) result = sigma_2star(f);
            out << format_factored(factorize(result, seed)) << '\n';
            return kExitOk;
        }
        if (verify_cmd->parsed()) return verify_catalog(catalog_tuples(), records, out);
        if (search_cmd->parsed()) {
            const std::string which = case_text.empty() ? "all" : case_text;
            return detail::run_search_command(which, workers, records, full_expansion, io);
        }
        if (mersenne_cmd->parsed() || scan_cmd->parsed()) {
            const auto bound = max_degree;
            if (!bound) {
                err << "error: a degree bound is required\n";
                return kExitUsage;
            }
            if (mersenne_cmd->parsed()) {
                if (*bound < 1) {
                    err << "error: max degree must be at least 1\n";
                    return kExitUsage;
                }
                for (const auto& m : enumerate_mersenne_primes(*bound)) {
                    out << "(" << m.form.a << "," << m.form.b << ")\t" << format(m.poly);
                    if (!records) {
                        if (auto i = in_M5_set(m.poly)) out << "\tM" << *i;
                    }
                    out << '\n';
                }
                return kExitOk;
            }
            if (*bound > kMaxScanDegree) {
                err << "error: scan degree " << *bound << " exceeds the limit " << kMaxScanDegree << '\n';
                return kExitUsage;
            }
            for (const auto& r : exhaustive_low_degree_scan(*bound, workers)) {
                out << format_factored(r.factorization);
                if (!records) {
                    out << '\t' << format(r.poly, Style::hex);
                    if (auto j = catalog_class_of(r.poly)) {
                        out << '\t' << (r.catalog_index ? "C" : "conjugate of C") << *j;
                    }
                }
                out << '\n';
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace gf2bup::cli

#endif  // GF2BUP_CLI_HPP
