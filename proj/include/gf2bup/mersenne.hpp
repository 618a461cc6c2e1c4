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

#ifndef GF2BUP_MERSENNE_HPP
#define GF2BUP_MERSENNE_HPP

#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "poly.hpp"

namespace gf2bup {

/// The pair (a, b), gcd(a, b) = 1, naming 1 + x^a (x+1)^b.
struct MersenneForm {
    unsigned a = 0;
    unsigned b = 0;

    friend bool operator==(const MersenneForm&, const MersenneForm&) = default;
};

inline Gf2Poly mersenne_poly(MersenneForm form) {
    if (form.a == 0 || form.b == 0 || std::gcd(form.a, form.b) != 1) {
        throw std::domain_error("mersenne_poly: need a, b >= 1 with gcd(a, b) = 1, got (" +
                                std::to_string(form.a) + "," + std::to_string(form.b) + ")");
    }
    return Gf2Poly::monomial(form.a) * pow(Gf2Poly::from_uint(3), form.b) + Gf2Poly::one();
}

inline std::optional<MersenneForm> is_mersenne_prime(const Gf2Poly& p) {
    detail::require_nonzero(p, "is_mersenne_prime");
    if (*p.degree() < 2 || !is_odd(p)) return std::nullopt;

    // p + 1 must be exactly x^a (x+1)^b.
    Gf2Poly rest = p + Gf2Poly::one();
    const auto a = static_cast<unsigned>(trailing_zeros(rest));
    rest = rest / Gf2Poly::monomial(a);
    unsigned b = 0;
    const Gf2Poly x_plus_1 = Gf2Poly::from_uint(3);
    while (!rest.at_one()) {
        rest = rest / x_plus_1;
        ++b;
    }
    if (!rest.is_one() || a == 0 || b == 0 || std::gcd(a, b) != 1) return std::nullopt;
    if (!is_irreducible(p)) return std::nullopt;
    return MersenneForm{a, b};
}

struct MersennePrime {
    MersenneForm form;
    Gf2Poly poly;
};

/// All Mersenne primes of degree <= max_degree, ordered by degree, then a.
inline std::vector<MersennePrime> enumerate_mersenne_primes(unsigned max_degree) {
    std::vector<MersennePrime> out;
    for (unsigned d = 2; d <= max_degree; ++d) {
        for (unsigned a = 1; a < d; ++a) {
            const MersenneForm form{a, d - a};
            if (std::gcd(form.a, form.b) != 1) continue;
            Gf2Poly p = mersenne_poly(form);
            if (is_irreducible(p)) out.push_back({form, std::move(p)});
        }
    }
    return out;
}

/// M1..M5: the Mersenne primes of degree at most 4, in enumeration order.
inline const std::array<Gf2Poly, 5>& small_mersenne_primes() {
    static const std::array<Gf2Poly, 5> kPrimes = {
        Gf2Poly::from_uint(0b111),    // 1+x+x^2
        Gf2Poly::from_uint(0b1011),   // 1+x+x^3
        Gf2Poly::from_uint(0b1101),   // 1+x^2+x^3
        Gf2Poly::from_uint(0b11111),  // 1+x+x^2+x^3+x^4
        Gf2Poly::from_uint(0b11001),  // 1+x^3+x^4
    };
    return kPrimes;
}

/// Index 1..5 when p is one of M1..M5.
inline std::optional<unsigned> in_M5_set(const Gf2Poly& p) {
    const auto& primes = small_mersenne_primes();
    for (unsigned i = 0; i < primes.size(); ++i) {
        if (primes[i] == p) return i + 1;
    }
    return std::nullopt;
}

}  // namespace gf2bup

#endif  // GF2BUP_MERSENNE_HPP
