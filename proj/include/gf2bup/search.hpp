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

#ifndef GF2BUP_SEARCH_HPP
#define GF2BUP_SEARCH_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "divisor_sums.hpp"
#include "factor.hpp"
#include "mersenne.hpp"
#include "poly.hpp"

namespace gf2bup {

// ---------------------------------------------------------------------------
// Fixpoint predicates.

inline bool is_bup(const Gf2Poly& s) {
    detail::require_nonzero(s, "is_bup");
    return sigma_2star(s) == s;
}

namespace detail {

inline bool is_bup(const Factorization& f, const Gf2Poly& expanded) { return sigma_2star(f) == expanded; }

}  // namespace detail

/// A b.u.p polynomial is indecomposable when no split of its prime powers
/// into two nonempty groups gives two b.u.p polynomials.
inline bool is_indecomposable_bup(const Gf2Poly& s) {
    if (!is_bup(s)) throw std::domain_error("is_indecomposable_bup: input is not bi-unitary perfect");
    const Factorization fac = factorize(s);
    const auto& f = fac.factors();
    const std::size_t n = f.size();
    if (n == 0) return true;
    if (n > 24) throw std::length_error("is_indecomposable_bup: too many prime factors");
    // The part holding the last prime is the complement, so masks range over the first n-1 primes.
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
        std::vector<PrimePower> left;
        std::vector<PrimePower> right;
        for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1u ? left : right).push_back(f[i]);
        const auto lf = Factorization::from_prime_powers(std::move(left));
        const auto rf = Factorization::from_prime_powers(std::move(right));
        if (detail::is_bup(lf, lf.expand()) && detail::is_bup(rf, rf.expand())) return false;
    }
    return true;
}

/// True when every odd prime factor of the b.u.p polynomial s is one of M1..M5.
inline bool reduction_check(const Gf2Poly& s) {
    if (!is_bup(s)) throw std::domain_error("reduction_check: input is not bi-unitary perfect");
    for (const auto& pp : factorize(s).factors()) {
        if (is_odd(pp.base) && !in_M5_set(pp.base)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Search space.

enum class CaseTag { even_even, even_odd, odd_even, odd_odd };

inline constexpr std::array<CaseTag, 4> kAllCases = {CaseTag::even_even, CaseTag::even_odd, CaseTag::odd_even,
                                                     CaseTag::odd_odd};

inline std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::even_even: return "even-even";
        case CaseTag::even_odd: return "even-odd";
        case CaseTag::odd_even: return "odd-even";
        case CaseTag::odd_odd: return "odd-odd";
    }
    return "?";
}

inline std::optional<CaseTag> parse_case_tag(std::string_view text) {
    for (CaseTag tag : kAllCases) {
        if (to_string(tag) == text) return tag;
    }
    return std::nullopt;
}

inline CaseTag case_of(unsigned a, unsigned b) {
    if (a % 2 == 0) return b % 2 == 0 ? CaseTag::even_even : CaseTag::even_odd;
    return b % 2 == 0 ? CaseTag::odd_even : CaseTag::odd_odd;
}

/// x^a (x+1)^b M1^h1 ... M5^h5.
struct CandidateTuple {
    unsigned a = 0;
    unsigned b = 0;
    std::array<unsigned, 5> h{};

    friend auto operator<=>(const CandidateTuple&, const CandidateTuple&) = default;

    Factorization factorization() const {
        std::vector<PrimePower> f;
        f.push_back({Gf2Poly::x(), a});
        f.push_back({Gf2Poly::from_uint(3), b});
        for (std::size_t i = 0; i < h.size(); ++i) f.push_back({small_mersenne_primes()[i], h[i]});
        return Factorization::from_prime_powers(std::move(f));
    }

    Gf2Poly expand() const { return factorization().expand(); }

    /// x <-> x+1 swaps a with b, M2 with M3 and M4 with M5; M1 is fixed.
    CandidateTuple conjugate() const { return {b, a, {h[0], h[2], h[1], h[4], h[3]}}; }

    std::string to_string() const {
        std::string s = "[" + std::to_string(a) + "," + std::to_string(b);
        for (unsigned e : h) s += "," + std::to_string(e);
        return s + "]";
    }
};

/// Which exponent sets to enumerate.
///   proved_bounds: the bounds proved for each case, with a <= b.
///   original_sets: the literal sets of the original computer session, kept to
///                  reproduce its reported candidate counts.
enum class CandidateProfile { proved_bounds, original_sets };

namespace detail {

inline const std::vector<unsigned> kK1 = {0, 1, 2, 3, 4, 5, 6, 7, 11, 23};
inline const std::vector<unsigned> kK2 = {0, 1, 2, 3, 4, 6, 7, 15};
inline const std::vector<unsigned> kEvenExponents = {2, 4, 6, 8, 10, 12, 14};
inline const std::vector<unsigned> kEvenExponentsWithZero = {0, 2, 4, 6, 8, 10, 12, 14};
inline const std::vector<unsigned> kSplitExponents = {0, 1, 2, 3, 7};
inline const std::vector<unsigned> kSplitExponentsWide = {0, 1, 2, 3, 7, 15};

// {2^beta v - 1 : 1 <= beta <= max_beta, v in {1,3,5,7}}, ascending.
inline std::vector<unsigned> odd_exponents(unsigned max_beta, unsigned max_value = ~0u) {
    std::vector<unsigned> out;
    for (unsigned beta = 1; beta <= max_beta; ++beta) {
        for (unsigned v = 1; v <= 7; v += 2) {
            const unsigned e = (1u << beta) * v - 1;
            if (e <= max_value) out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class Emit>
void for_each_h(const std::vector<unsigned>& h145, const std::vector<unsigned>& h23, Emit&& emit) {
    for (unsigned h1 : h145)
        for (unsigned h2 : h23)
            for (unsigned h4 : h145)
                for (unsigned h5 : h145) emit(std::array<unsigned, 5>{h1, h2, h2, h4, h5});
}

}  // namespace detail

/// Candidate tuples for one parity case, in lexicographic order.
inline std::vector<CandidateTuple> candidate_tuples(CaseTag tag,
                                                    CandidateProfile profile = CandidateProfile::proved_bounds) {
    using namespace detail;
    std::vector<CandidateTuple> out;
    auto add_pairs = [&](const std::vector<unsigned>& as, const std::vector<unsigned>& bs, bool ordered,
                         const std::vector<unsigned>& h145, const std::vector<unsigned>& h23) {
        for (unsigned a : as) {
            for (unsigned b : bs) {
                if (ordered && a > b) continue;
                for_each_h(h145, h23, [&](const std::array<unsigned, 5>& h) { out.push_back({a, b, h}); });
            }
        }
    };

    switch (tag) {
        case CaseTag::even_even:
            add_pairs(kEvenExponents, kEvenExponents, true, kSplitExponents, kK1);
            break;
        case CaseTag::even_odd:
        case CaseTag::odd_even: {
            const bool even_first = tag == CaseTag::even_odd;
            if (profile == CandidateProfile::original_sets) {
                std::vector<unsigned> odd = odd_exponents(3);
                odd.insert(odd.begin(), 0u);
                add_pairs(even_first ? kEvenExponents : odd, even_first ? odd : kEvenExponents, false,
                          kSplitExponents, kK1);
            } else {
                const std::vector<unsigned> odd = odd_exponents(3);
                add_pairs(even_first ? kEvenExponentsWithZero : odd, even_first ? odd : kEvenExponentsWithZero,
                          true, kSplitExponentsWide, kK1);
            }
            break;
        }
        case CaseTag::odd_odd: {
            const std::vector<unsigned> odd =
                profile == CandidateProfile::original_sets ? odd_exponents(3, 27) : odd_exponents(3);
            const std::vector<unsigned> zero = {0};
            for (unsigned a : odd) {
                for (unsigned b : odd) {
                    if (a > b) continue;
                    const auto fa = odd_exponent_form(a);
                    const auto fb = odd_exponent_form(b);
                    // x^(2^n-1) (x+1)^(2^n-1) times an odd part is never b.u.p.
                    if (fa.u == 1 && fb.u == 1 && a == b) continue;
                    const bool seven = fa.u == 7 || fb.u == 7;
                    for_each_h(kK2, seven ? kK2 : zero,
                               [&](const std::array<unsigned, 5>& h) { out.push_back({a, b, h}); });
                }
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Catalog.

/// A certified bi-unitary perfect polynomial.
struct BupRecord {
    Gf2Poly poly;
    Factorization factorization;
    std::optional<CandidateTuple> tuple;  // when only x, x+1 and M1..M5 divide poly
    std::optional<CaseTag> case_tag;      // search case that produced it, or the catalog entry's parity
    std::string conjugate_class;          // "C7" for catalog classes, else hex of min(poly, conjugate)
    std::optional<unsigned> catalog_index;
};

/// Exponent tuples of C1..C23 (index j-1 holds C_j).
inline const std::array<CandidateTuple, 23>& catalog_tuples() {
    static const std::array<CandidateTuple, 23> kTuples = {{
        {3, 4, {1, 0, 0, 0, 0}},   {3, 5, {2, 0, 0, 0, 0}},    {4, 4, {2, 0, 0, 0, 0}},
        {6, 6, {2, 0, 0, 0, 0}},   {4, 5, {3, 0, 0, 0, 0}},    {7, 8, {0, 0, 0, 0, 1}},
        {7, 9, {0, 0, 0, 0, 2}},   {8, 8, {0, 0, 0, 1, 1}},    {8, 9, {0, 0, 0, 1, 2}},
        {7, 10, {2, 0, 0, 0, 1}},  {7, 13, {0, 2, 2, 0, 0}},   {9, 9, {0, 0, 0, 2, 2}},
        {14, 14, {0, 2, 2, 0, 0}}, {8, 10, {2, 0, 0, 1, 1}},   {8, 12, {2, 1, 1, 1, 0}},
        {10, 13, {2, 2, 2, 1, 0}}, {13, 13, {2, 4, 4, 1, 1}},  {12, 13, {2, 3, 3, 0, 0}},
        {9, 13, {0, 2, 2, 2, 0}},  {8, 13, {0, 2, 2, 1, 0}},   {9, 10, {2, 0, 0, 2, 1}},
        {7, 12, {2, 1, 1, 0, 0}},  {9, 12, {2, 1, 1, 2, 0}},
    }};
    return kTuples;
}

/// Catalog indices expected from each search case.
inline std::vector<unsigned> expected_catalog_classes(CaseTag tag) {
    switch (tag) {
        case CaseTag::even_even: return {3, 4, 8, 13, 14, 15};
        case CaseTag::even_odd: return {5, 9, 16, 18, 20};
        case CaseTag::odd_even: return {1, 6, 10, 21, 22, 23};
        case CaseTag::odd_odd: return {2, 7, 11, 12, 17, 19};
    }
    return {};
}

/// j when p = C_j.
inline std::optional<unsigned> catalog_index_of(const Gf2Poly& p) {
    static const std::vector<Gf2Poly> kPolys = [] {
        std::vector<Gf2Poly> v;
        for (const auto& t : catalog_tuples()) v.push_back(t.expand());
        return v;
    }();
    for (std::size_t j = 0; j < kPolys.size(); ++j) {
        if (kPolys[j] == p) return static_cast<unsigned>(j + 1);
    }
    return std::nullopt;
}

/// j when p = C_j or conjugate(p) = C_j.
inline std::optional<unsigned> catalog_class_of(const Gf2Poly& p) {
    if (auto j = catalog_index_of(p)) return j;
    return catalog_index_of(conjugate(p));
}

namespace detail {

// Reads p as x^a (x+1)^b prod M_i^h_i when no other prime divides it.
inline std::optional<CandidateTuple> as_tuple(const Factorization& f) {
    CandidateTuple t;
    for (const auto& pp : f.factors()) {
        if (pp.base == Gf2Poly::x()) {
            t.a = pp.exp;
        } else if (pp.base == Gf2Poly::from_uint(3)) {
            t.b = pp.exp;
        } else if (auto i = in_M5_set(pp.base)) {
            t.h[*i - 1] = pp.exp;
        } else {
            return std::nullopt;
        }
    }
    return t;
}

inline BupRecord make_record(Gf2Poly poly, Factorization f, std::optional<CaseTag> tag) {
    BupRecord r;
    r.tuple = as_tuple(f);
    r.case_tag = tag;
    r.catalog_index = catalog_index_of(poly);
    if (auto j = catalog_class_of(poly)) {
        r.conjugate_class = "C" + std::to_string(*j);
    } else {
        r.conjugate_class = format(std::min(poly, conjugate(poly)), Style::hex);
    }
    r.poly = std::move(poly);
    r.factorization = std::move(f);
    return r;
}

inline void canonical_sort(std::vector<BupRecord>& records) {
    std::sort(records.begin(), records.end(), [](const BupRecord& l, const BupRecord& r) { return l.poly < r.poly; });
    records.erase(std::unique(records.begin(), records.end(),
                              [](const BupRecord& l, const BupRecord& r) { return l.poly == r.poly; }),
                  records.end());
}

// Runs body(i) for i in [0, n) across workers with a strided split; each
// worker collects into its own vector.
template <class T, class Body>
std::vector<T> parallel_collect(std::size_t n, unsigned workers, Body body) {
    workers = std::max(1u, workers);
    std::vector<std::vector<T>> partial(workers);
    auto run = [&](unsigned w) {
        for (std::size_t i = w; i < n; i += workers) body(i, partial[w]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    std::vector<T> merged;
    for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(merged));
    return merged;
}

}  // namespace detail

/// C1..C23 with their factorizations.
inline std::vector<BupRecord> catalog() {
    std::vector<BupRecord> out;
    for (const auto& t : catalog_tuples()) {
        auto f = t.factorization();
        Gf2Poly p = f.expand();
        out.push_back(detail::make_record(std::move(p), std::move(f), case_of(t.a, t.b)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Search.

struct SearchOptions {
    CandidateProfile profile = CandidateProfile::proved_bounds;
    unsigned workers = 1;
    bool force_full_expansion = false;  // skip the exponent-vector shortcut
};

struct CaseSummary {
    CaseTag tag;
    std::size_t candidates = 0;
    std::size_t hits = 0;  // before conjugate closure
};

struct SearchReport {
    std::vector<BupRecord> records;  // conjugate-closed, canonical order
    std::vector<CaseSummary> cases;
    double seconds = 0.0;
};

namespace detail {

// sigma**(P^e) over the basis {x, x+1, M1..M5}, as exponent vectors;
// nullopt when some other prime divides it.
class SigmaTable {
  public:
    using Vec = std::array<unsigned, 7>;

    explicit SigmaTable(unsigned max_exp) {
        const std::array<Gf2Poly, 7> basis = {Gf2Poly::x(),
                                              Gf2Poly::from_uint(3),
                                              small_mersenne_primes()[0],
                                              small_mersenne_primes()[1],
                                              small_mersenne_primes()[2],
                                              small_mersenne_primes()[3],
                                              small_mersenne_primes()[4]};
        for (std::size_t i = 0; i < basis.size(); ++i) {
            table_[i].resize(max_exp + 1);
            for (unsigned e = 0; e <= max_exp; ++e) {
                const auto f = factorize(sigma_2star_prime_power({basis[i], e}));
                if (auto t = as_tuple(f)) table_[i][e] = Vec{t->a, t->b, t->h[0], t->h[1], t->h[2], t->h[3], t->h[4]};
            }
        }
    }

    bool is_fixpoint(const CandidateTuple& t) const {
        const Vec target = {t.a, t.b, t.h[0], t.h[1], t.h[2], t.h[3], t.h[4]};
        Vec sum{};
        for (std::size_t i = 0; i < target.size(); ++i) {
            const auto& v = table_[i][target[i]];
            if (!v) return false;
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += (*v)[k];
        }
        return sum == target;
    }

  private:
    std::array<std::vector<std::optional<Vec>>, 7> table_;
};

inline bool full_expansion_fixpoint(const CandidateTuple& t) {
    const auto f = t.factorization();
    return sigma_2star(f) == f.expand();
}

}  // namespace detail

/// Verifies every candidate of the given cases and returns the indecomposable
/// b.u.p hits with omega >= 3, closed under conjugation.
inline SearchReport run_search(std::span<const CaseTag> cases, const SearchOptions& options = {}) {
    const auto start = std::chrono::steady_clock::now();
    SearchReport report;
    std::vector<BupRecord> records;

    for (CaseTag tag : cases) {
        const auto tuples = candidate_tuples(tag, options.profile);
        unsigned max_exp = 0;
        for (const auto& t : tuples) max_exp = std::max({max_exp, t.a, t.b, *std::max_element(t.h.begin(), t.h.end())});
        const detail::SigmaTable table(max_exp);

        auto hits = detail::parallel_collect<CandidateTuple>(
            tuples.size(), options.workers, [&](std::size_t i, std::vector<CandidateTuple>& out) {
                const auto& t = tuples[i];
                if (std::all_of(t.h.begin(), t.h.end(), [](unsigned e) { return e == 0; })) return;
                const bool hit = options.force_full_expansion ? detail::full_expansion_fixpoint(t)
                                                              : table.is_fixpoint(t);
                if (hit) out.push_back(t);
            });
        std::sort(hits.begin(), hits.end());

        std::size_t kept = 0;
        for (const auto& t : hits) {
            // Certify on the expanded polynomial, independently of the tuple.
            Gf2Poly p = t.expand();
            if (!is_bup(p)) throw std::logic_error("run_search: candidate " + t.to_string() + " failed certification");
            if (!is_indecomposable_bup(p)) continue;
            ++kept;
            Gf2Poly q = conjugate(p);
            records.push_back(detail::make_record(q, factorize(q), tag));
            records.push_back(detail::make_record(std::move(p), t.factorization(), tag));
        }
        report.cases.push_back({tag, tuples.size(), kept});
    }

    detail::canonical_sort(records);
    report.records = std::move(records);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline SearchReport run_search(CaseTag tag, const SearchOptions& options = {}) {
    const std::array<CaseTag, 1> one = {tag};
    return run_search(one, options);
}

inline SearchReport run_search_all(const SearchOptions& options = {}) { return run_search(kAllCases, options); }

inline constexpr unsigned kMaxScanDegree = 20;

/// Every sigma**-fixpoint of degree <= max_degree, by brute force over all
/// nonzero polynomials. No restriction on the prime factors.
inline std::vector<BupRecord> exhaustive_low_degree_scan(unsigned max_degree, unsigned workers = 1) {
    if (max_degree > kMaxScanDegree) {
        throw std::out_of_range("exhaustive_low_degree_scan: max_degree " + std::to_string(max_degree) +
                                " exceeds " + std::to_string(kMaxScanDegree));
    }
    const std::uint64_t count = (std::uint64_t{1} << (max_degree + 1)) - 1;
    auto records = detail::parallel_collect<BupRecord>(count, workers, [](std::size_t i, std::vector<BupRecord>& out) {
        Gf2Poly p = Gf2Poly::from_uint(i + 1);
        auto f = factorize(p);
        if (sigma_2star(f) == p) out.push_back(detail::make_record(std::move(p), std::move(f), std::nullopt));
    });
    detail::canonical_sort(records);
    return records;
}

}  // namespace gf2bup

#endif  // GF2BUP_SEARCH_HPP
