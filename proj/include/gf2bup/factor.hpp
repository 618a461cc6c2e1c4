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

#ifndef GF2BUP_FACTOR_HPP
#define GF2BUP_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace gf2bup {

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed2b0b5eedull;

struct PrimePower {
    Gf2Poly base;
    unsigned exp = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Unique factorization into irreducibles, kept in canonical order
/// (ascending degree, then ascending hex encoding of the base).
class Factorization {
  public:
    Factorization() = default;

    /// Sorts and merges equal bases. Callers guarantee the bases are irreducible.
    static Factorization from_prime_powers(std::vector<PrimePower> factors) {
        std::erase_if(factors, [](const PrimePower& pp) { return pp.exp == 0; });
        std::sort(factors.begin(), factors.end(),
                  [](const PrimePower& a, const PrimePower& b) { return a.base < b.base; });
        Factorization f;
        for (auto& pp : factors) {
            if (!f.factors_.empty() && f.factors_.back().base == pp.base) {
                f.factors_.back().exp += pp.exp;
            } else {
                f.factors_.push_back(std::move(pp));
            }
        }
        return f;
    }

    const std::vector<PrimePower>& factors() const& noexcept { return factors_; }
    std::vector<PrimePower> factors() && noexcept { return std::move(factors_); }
    std::size_t omega() const noexcept { return factors_.size(); }

    unsigned valuation(const Gf2Poly& base) const noexcept {
        for (const auto& pp : factors_) {
            if (pp.base == base) return pp.exp;
        }
        return 0;
    }

    Gf2Poly expand() const {
        Gf2Poly p = Gf2Poly::one();
        for (const auto& pp : factors_) p *= pow(pp.base, pp.exp);
        return p;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;

  private:
    std::vector<PrimePower> factors_;
};

/// "x^3*(x+1)^4*(x^2+x+1)"; the unit is "1". Multi-term bases are parenthesized.
inline std::string format_factored(const Factorization& f) {
    if (f.factors().empty()) return "1";
    std::string out;
    for (const auto& pp : f.factors()) {
        if (!out.empty()) out.push_back('*');
        const bool bare = pp.base.weight() == 1;
        const std::string base = format(pp.base);
        out += bare ? base : "(" + base + ")";
        if (pp.exp != 1) out += "^" + std::to_string(pp.exp);
    }
    return out;
}

namespace detail {

inline void require_nonconstant(const Gf2Poly& p, const char* what) {
    if (p.is_zero() || *p.degree() == 0) throw std::domain_error(std::string(what) + ": constant input");
}

inline void require_nonzero(const Gf2Poly& p, const char* what) {
    if (p.is_zero()) throw std::domain_error(std::string(what) + ": zero input");
}

inline std::vector<std::size_t> prime_divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// x^(2^k) mod f by repeated squaring of h.
inline Gf2Poly frobenius_power(Gf2Poly h, std::size_t k, const Gf2Poly& f) {
    for (std::size_t i = 0; i < k; ++i) h = sqrmod(h, f);
    return h;
}

inline Gf2Poly random_below(std::size_t degree_bound, std::mt19937_64& rng) {
    std::vector<Word> w((degree_bound + kWordBits - 1) / kWordBits, 0);
    for (auto& word : w) word = rng();
    if (degree_bound % kWordBits != 0) w.back() &= (Word{1} << (degree_bound % kWordBits)) - 1;
    return Gf2Poly::from_words(std::move(w));
}

// Square-free decomposition in characteristic 2: appends (g, m) with g
// square-free and pairwise coprime, f = prod g^m.
inline void squarefree_parts(const Gf2Poly& f, unsigned mult, std::vector<PrimePower>& out) {
    Gf2Poly c = gcd(f, derivative(f));
    Gf2Poly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        Gf2Poly y = gcd(w, c);
        Gf2Poly z = w / y;
        if (!z.is_one()) out.push_back({std::move(z), i * mult});
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_one()) squarefree_parts(sqrt_of_square(c), 2 * mult, out);
}

// Splits a square-free f into products of irreducibles of equal degree d.
inline std::vector<std::pair<Gf2Poly, std::size_t>> distinct_degree(Gf2Poly f) {
    std::vector<std::pair<Gf2Poly, std::size_t>> out;
    Gf2Poly h = Gf2Poly::x() % f;
    for (std::size_t d = 1; 2 * d <= *f.degree(); ++d) {
        h = sqrmod(h, f);
        Gf2Poly g = gcd(h + Gf2Poly::x(), f);
        if (!g.is_one()) {
            f = f / g;
            out.emplace_back(std::move(g), d);
            h = h % f;
        }
    }
    if (*f.degree() > 0) {
        const std::size_t d = *f.degree();
        out.emplace_back(std::move(f), d);
    }
    return out;
}

// Cantor-Zassenhaus splitting with the absolute trace map a + a^2 + ... + a^(2^(d-1)).
inline void equal_degree(const Gf2Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Gf2Poly>& out) {
    const std::size_t n = *f.degree();
    if (n == d) {
        out.push_back(f);
        return;
    }
    for (;;) {
        const Gf2Poly a = random_below(n, rng);
        Gf2Poly t = a;
        Gf2Poly s = a;
        for (std::size_t i = 1; i < d; ++i) {
            s = sqrmod(s, f);
            t += s;
        }
        if (t.is_zero()) continue;
        Gf2Poly g = gcd(t, f);
        const std::size_t gd = *g.degree();
        if (gd == 0 || gd == n) continue;
        equal_degree(g, d, rng, out);
        equal_degree(f / g, d, rng, out);
        return;
    }
}

}  // namespace detail

/// Irreducibility via x^(2^n) = x (mod f) and gcd(x^(2^(n/q)) - x, f) = 1
/// for every prime q | n.
inline bool is_irreducible(const Gf2Poly& f) {
    detail::require_nonconstant(f, "is_irreducible");
    const std::size_t n = *f.degree();
    const Gf2Poly x = Gf2Poly::x() % f;
    if (detail::frobenius_power(x, n, f) != x) return false;
    for (std::size_t q : detail::prime_divisors(n)) {
        const Gf2Poly h = detail::frobenius_power(x, n / q, f);
        if (!gcd(h + x, f).is_one()) return false;
    }
    return true;
}

/// Complete factorization. Output is independent of the seed.
inline Factorization factorize(const Gf2Poly& p, std::uint64_t seed = kDefaultFactorSeed) {
    detail::require_nonzero(p, "factorize");
    std::vector<PrimePower> result;

    // Peel off x and x+1 first: they dominate the inputs we see.
    Gf2Poly rest = p;
    if (const std::size_t k = trailing_zeros(rest); k > 0) {
        result.push_back({Gf2Poly::x(), static_cast<unsigned>(k)});
        rest = rest / Gf2Poly::monomial(k);
    }
    const Gf2Poly x_plus_1 = Gf2Poly::from_uint(3);
    unsigned k1 = 0;
    while (!rest.at_one()) {
        rest = rest / x_plus_1;
        ++k1;
    }
    if (k1 > 0) result.push_back({x_plus_1, k1});
    if (rest.is_one()) return Factorization::from_prime_powers(std::move(result));

    std::mt19937_64 rng(seed);
    std::vector<PrimePower> parts;
    detail::squarefree_parts(rest, 1, parts);
    for (const auto& part : parts) {
        for (auto& [block, d] : detail::distinct_degree(part.base)) {
            std::vector<Gf2Poly> irreducibles;
            detail::equal_degree(block, d, rng, irreducibles);
            for (auto& q : irreducibles) result.push_back({std::move(q), part.exp});
        }
    }
    return Factorization::from_prime_powers(std::move(result));
}

inline std::size_t omega(const Gf2Poly& p) { return factorize(p).omega(); }

/// gcd(p, x(x+1)) = 1.
inline bool is_odd(const Gf2Poly& p) {
    detail::require_nonzero(p, "is_odd");
    return p.at_zero() && p.at_one();
}

inline bool is_squarefree(const Gf2Poly& p) {
    detail::require_nonzero(p, "is_squarefree");
    const Factorization fac = factorize(p);
    const auto& f = fac.factors();
    return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.exp == 1; });
}

}  // namespace gf2bup

#endif  // GF2BUP_FACTOR_HPP
