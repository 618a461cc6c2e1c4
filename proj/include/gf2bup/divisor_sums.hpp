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

#ifndef GF2BUP_DIVISOR_SUMS_HPP
#define GF2BUP_DIVISOR_SUMS_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "poly.hpp"

namespace gf2bup {

/// 1 + T + ... + T^e.
inline Gf2Poly sigma_prime_power(const PrimePower& pp) {
    Gf2Poly r = Gf2Poly::one();
    for (unsigned l = 0; l < pp.exp; ++l) r = r * pp.base + Gf2Poly::one();
    return r;
}

inline Gf2Poly sigma(const Factorization& f) {
    Gf2Poly r = Gf2Poly::one();
    for (const auto& pp : f.factors()) r *= sigma_prime_power(pp);
    return r;
}

inline Gf2Poly sigma(const Gf2Poly& s) {
    detail::require_nonzero(s, "sigma");
    return sigma(factorize(s));
}

inline Gf2Poly sigma_star(const Factorization& f) {
    Gf2Poly r = Gf2Poly::one();
    for (const auto& pp : f.factors()) r *= pow(pp.base, pp.exp) + Gf2Poly::one();
    return r;
}

inline Gf2Poly sigma_star(const Gf2Poly& s) {
    detail::require_nonzero(s, "sigma_star");
    return sigma_star(factorize(s));
}

/// Bi-unitary divisor sum of T^e for irreducible T:
///   e = 2n     -> (1+T) sigma(T^n) sigma(T^(n-1))
///   e = 2n + 1 -> sigma(T^e)
inline Gf2Poly sigma_2star_prime_power(const PrimePower& pp) {
    if (pp.exp == 0) return Gf2Poly::one();
    if (pp.exp % 2 == 1) return sigma_prime_power(pp);
    const unsigned n = pp.exp / 2;
    return (pp.base + Gf2Poly::one()) * sigma_prime_power({pp.base, n}) * sigma_prime_power({pp.base, n - 1});
}

inline Gf2Poly sigma_2star(const Factorization& f) {
    Gf2Poly r = Gf2Poly::one();
    for (const auto& pp : f.factors()) r *= sigma_2star_prime_power(pp);
    return r;
}

inline Gf2Poly sigma_2star(const Gf2Poly& s) {
    detail::require_nonzero(s, "sigma_2star");
    return sigma_2star(factorize(s));
}

/// Greatest common unitary divisor: the product of P^e over the primes P
/// whose exponent e is the same in s and t.
inline Gf2Poly gcd_unitary(const Gf2Poly& s, const Gf2Poly& t) {
    detail::require_nonzero(s, "gcd_unitary");
    detail::require_nonzero(t, "gcd_unitary");
    Gf2Poly r = Gf2Poly::one();
    for (const auto& pp : factorize(gcd(s, t)).factors()) {
        auto valuation = [&](Gf2Poly v) {
            unsigned k = 0;
            for (;;) {
                auto [q, rem] = divrem(v, pp.base);
                if (!rem.is_zero()) return k;
                v = std::move(q);
                ++k;
            }
        };
        const unsigned vs = valuation(s);
        if (vs == valuation(t)) r *= pow(pp.base, vs);
    }
    return r;
}

inline constexpr std::size_t kBiunitaryOracleDegree = 24;

/// Every bi-unitary divisor of s, by walking the exponent lattice of its
/// factorization. Brute force; refuses inputs above max_degree.
inline std::vector<Gf2Poly> biunitary_divisors(const Gf2Poly& s, std::size_t max_degree = kBiunitaryOracleDegree) {
    detail::require_nonzero(s, "biunitary_divisors");
    if (*s.degree() > max_degree) {
        throw std::length_error("biunitary_divisors: degree " + std::to_string(*s.degree()) +
                                " above oracle bound " + std::to_string(max_degree));
    }
    const Factorization fac = factorize(s);
    const auto& f = fac.factors();
    std::vector<unsigned> k(f.size(), 0);
    std::vector<Gf2Poly> out;
    for (;;) {
        Gf2Poly d = Gf2Poly::one();
        for (std::size_t i = 0; i < f.size(); ++i) d *= pow(f[i].base, k[i]);
        if (gcd_unitary(d, s / d).is_one()) out.push_back(std::move(d));

        std::size_t i = 0;
        while (i < f.size() && k[i] == f[i].exp) k[i++] = 0;
        if (i == f.size()) break;
        ++k[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct OddExponentForm {
    unsigned alpha = 0;
    unsigned u = 0;

    friend bool operator==(const OddExponentForm&, const OddExponentForm&) = default;
};

/// a = 2^alpha * u - 1 with u odd and alpha >= 1.
inline OddExponentForm odd_exponent_form(unsigned a) {
    if (a % 2 == 0) throw std::domain_error("odd_exponent_form: even exponent " + std::to_string(a));
    unsigned m = a + 1;
    unsigned alpha = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++alpha;
    }
    return {alpha, m};
}

}  // namespace gf2bup

#endif  // GF2BUP_DIVISOR_SUMS_HPP
