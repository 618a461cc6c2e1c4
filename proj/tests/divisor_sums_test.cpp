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

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "gf2bup/divisor_sums.hpp"
#include "gf2bup/mersenne.hpp"
#include "test_support.hpp"

namespace gf2bup {
namespace {

using testing::make_rng;
using testing::poly_of;
using testing::random_nonzero;

const Gf2Poly kOne = Gf2Poly::one();
const Gf2Poly kX = Gf2Poly::x();
const Gf2Poly kXp1 = parse("x+1");
const Gf2Poly kM1 = parse("x^2+x+1");
const Gf2Poly kM2 = parse("x^3+x+1");
const Gf2Poly kM3 = parse("x^3+x^2+1");
const Gf2Poly kM4 = parse("x^4+x^3+x^2+x+1");
const Gf2Poly kM5 = parse("x^4+x^3+1");
const std::vector<Gf2Poly> kSmallPrimes = {kX, kXp1, kM1, kM2, kM3, kM4, kM5};

// --- definition-level oracles (plain gcd and trial division only) ---

bool is_unitary_divisor(const Gf2Poly& d, const Gf2Poly& s) {
    return divides(d, s) && gcd(d, s / d).is_one();
}

// Greatest common unitary divisor by enumeration of the divisors of s.
Gf2Poly gcd_unitary_by_enumeration(const Gf2Poly& s, const Gf2Poly& t) {
    Gf2Poly best = kOne;
    for (const auto& d : testing::trial_divisors(s)) {
        if (is_unitary_divisor(d, s) && is_unitary_divisor(d, t) && *d.degree() > *best.degree()) best = d;
    }
    return best;
}

Gf2Poly sum_of(const std::vector<Gf2Poly>& v) {
    Gf2Poly s;
    for (const auto& p : v) s += p;
    return s;
}

// --- operation examples ---

TEST(SigmaPrimePower, Examples) {
    EXPECT_EQ(sigma_prime_power({kX, 2}), kM1);
    EXPECT_EQ(sigma_prime_power({kX, 4}), kM4);
    EXPECT_EQ(sigma_prime_power({kX, 6}), kM2 * kM3);
    EXPECT_EQ(sigma_prime_power({kM3, 0}), kOne);
    EXPECT_EQ(*sigma_prime_power({kM5, 7}).degree(), 28u);
}

TEST(Sigma, Examples) {
    EXPECT_EQ(sigma(parse("x^2*(x+1)^2")), kM1 * kM1);
    EXPECT_EQ(sigma(kOne), kOne);
    EXPECT_EQ(sigma(kX * kXp1), kXp1 * kX);
    EXPECT_THROW(sigma(Gf2Poly{}), std::domain_error);
}

TEST(GcdUnitary, Examples) {
    EXPECT_EQ(gcd_unitary(pow(kX, 3), pow(kX, 3)), pow(kX, 3));
    EXPECT_EQ(gcd_unitary(pow(kX, 3), pow(kX, 5)), kOne);
    const Gf2Poly s = parse("x^2*(x+1)");
    const Gf2Poly t = parse("x^2*(x+1)^3");
    EXPECT_EQ(gcd_unitary(s, t), kX * kX);
    EXPECT_EQ(gcd_unitary_by_enumeration(s, t), kX * kX);
    EXPECT_THROW(gcd_unitary(Gf2Poly{}, kX), std::domain_error);
}

TEST(GcdUnitary, PrimePowerRule) {
    for (const auto& p : kSmallPrimes) {
        for (unsigned k = 1; k <= 6; ++k) {
            for (unsigned l = 1; l <= 6; ++l) {
                EXPECT_EQ(gcd_unitary(pow(p, k), pow(p, l)), k == l ? pow(p, k) : kOne);
            }
        }
    }
}

TEST(GcdUnitary, AgreesWithEnumeration) {
    auto rng = make_rng(21);
    for (int i = 0; i < 150; ++i) {
        const Gf2Poly base = random_nonzero(rng, 3);
        const Gf2Poly s = base * random_nonzero(rng, 5);
        const Gf2Poly t = base * random_nonzero(rng, 5);
        EXPECT_EQ(gcd_unitary(s, t), gcd_unitary_by_enumeration(s, t)) << format(s) << " / " << format(t);
    }
}

TEST(SigmaStar, Examples) {
    EXPECT_EQ(sigma_star(kX * kX), kXp1 * kXp1);
    EXPECT_EQ(sigma_star(kOne), kOne);
    EXPECT_EQ(sigma_star(kX * kXp1), kXp1 * kX);
    EXPECT_THROW(sigma_star(Gf2Poly{}), std::domain_error);
}

TEST(Sigma2StarPrimePower, Examples) {
    EXPECT_EQ(sigma_2star_prime_power({kX, 2}), kXp1 * kXp1);
    EXPECT_EQ(sigma_2star_prime_power({kX, 4}), kXp1 * kXp1 * kM1);
    EXPECT_EQ(sigma_2star_prime_power({kM2, 4}), pow(kX, 2) * pow(kXp1, 4) * kM1 * kM5);
    EXPECT_EQ(sigma_2star_prime_power({kM2, 0}), kOne);
}

TEST(Sigma2Star, Examples) {
    const Gf2Poly two_prime = parse("x^2*(x+1)^2");
    EXPECT_EQ(sigma_2star(two_prime), two_prime);
    EXPECT_EQ(sigma_2star(parse("x*(x+1)^2")), parse("x^2*(x+1)"));
    const Gf2Poly c1 = parse("x^3*(x+1)^4*(x^2+x+1)");
    EXPECT_EQ(sigma_2star(c1), c1);
    EXPECT_EQ(sigma_2star(kOne), kOne);
    EXPECT_THROW(sigma_2star(Gf2Poly{}), std::domain_error);
}

TEST(BiunitaryDivisors, Examples) {
    EXPECT_EQ(biunitary_divisors(kX * kX), (std::vector<Gf2Poly>{kOne, kX * kX}));
    EXPECT_EQ(biunitary_divisors(pow(kX, 3)), (std::vector<Gf2Poly>{kOne, kX, pow(kX, 2), pow(kX, 3)}));
    EXPECT_EQ(biunitary_divisors(kOne), (std::vector<Gf2Poly>{kOne}));
    EXPECT_THROW(biunitary_divisors(Gf2Poly::monomial(25)), std::length_error);
    EXPECT_NO_THROW(biunitary_divisors(Gf2Poly::monomial(25), 30));
}

// The lattice enumeration against the definition, over every divisor found by trial division.
TEST(BiunitaryDivisors, MatchDefinitionByTrialDivision) {
    for (std::uint64_t n = 1; n < (std::uint64_t{1} << 9); ++n) {
        const Gf2Poly s = poly_of(n);
        std::vector<Gf2Poly> expected;
        for (const auto& d : testing::trial_divisors(s)) {
            if (gcd_unitary_by_enumeration(d, s / d).is_one()) expected.push_back(d);
        }
        std::sort(expected.begin(), expected.end());
        ASSERT_EQ(biunitary_divisors(s), expected) << format(s);
    }
}

TEST(OddExponentForm, Examples) {
    EXPECT_EQ(odd_exponent_form(7), (OddExponentForm{3, 1}));
    EXPECT_EQ(odd_exponent_form(11), (OddExponentForm{2, 3}));
    EXPECT_EQ(odd_exponent_form(55), (OddExponentForm{3, 7}));
    EXPECT_EQ(odd_exponent_form(1), (OddExponentForm{1, 1}));
    EXPECT_THROW(odd_exponent_form(10), std::domain_error);
    for (unsigned a = 1; a < 500; a += 2) {
        const auto f = odd_exponent_form(a);
        EXPECT_EQ((1u << f.alpha) * f.u - 1, a);
        EXPECT_EQ(f.u % 2, 1u);
        EXPECT_GE(f.alpha, 1u);
    }
}

// --- properties ---

TEST(DivisorSumProperty, SigmaAndSigmaStarMatchDivisorEnumeration) {
    for (std::uint64_t n = 1; n < (std::uint64_t{1} << 10); ++n) {
        const Gf2Poly s = poly_of(n);
        const auto divisors = testing::trial_divisors(s);
        Gf2Poly all;
        Gf2Poly unitary;
        for (const auto& d : divisors) {
            all += d;
            if (gcd(d, s / d).is_one()) unitary += d;
        }
        ASSERT_EQ(sigma(s), all) << format(s);
        ASSERT_EQ(sigma_star(s), unitary) << format(s);
    }
}

TEST(DivisorSumProperty, Sigma2StarMatchesOracleRandom) {
    auto rng = make_rng(22);
    for (int i = 0; i < 300; ++i) {
        const Gf2Poly s = random_nonzero(rng, 24);
        EXPECT_EQ(sigma_2star(s), sum_of(biunitary_divisors(s))) << format(s);
    }
}

TEST(DivisorSumProperty, Multiplicative) {
    auto rng = make_rng(23);
    int checked = 0;
    while (checked < 200) {
        const Gf2Poly s = random_nonzero(rng, 40);
        const Gf2Poly t = random_nonzero(rng, 40);
        if (!gcd(s, t).is_one()) continue;
        ++checked;
        EXPECT_EQ(sigma_2star(s * t), sigma_2star(s) * sigma_2star(t));
        EXPECT_EQ(sigma_star(s * t), sigma_star(s) * sigma_star(t));
        EXPECT_EQ(sigma(s * t), sigma(s) * sigma(t));
    }
}

TEST(DivisorSumProperty, ConjugationEquivariant) {
    auto rng = make_rng(24);
    for (int i = 0; i < 200; ++i) {
        const Gf2Poly s = random_nonzero(rng, 60);
        EXPECT_EQ(sigma_2star(conjugate(s)), conjugate(sigma_2star(s)));
        EXPECT_EQ(*sigma_2star(s).degree(), *s.degree());
    }
}

TEST(DivisorSumProperty, ClosedFormsByExponentShape) {
    for (const auto& t : kSmallPrimes) {
        const Gf2Poly one_plus_t = t + kOne;
        for (unsigned a = 1; a <= 64; ++a) {
            Gf2Poly expected;
            if (a % 2 == 1) {
                const auto [alpha, u] = odd_exponent_form(a);
                expected = pow(one_plus_t, (1u << alpha) - 1) * pow(sigma_prime_power({t, u - 1}), 1u << alpha);
            } else {
                // a = 4r: 2r = 2^alpha u;  a = 4r + 2: 2r + 2 = 2^alpha u.
                const unsigned r = a / 4;
                const unsigned m = a % 4 == 0 ? 2 * r : 2 * r + 2;
                unsigned alpha = 0;
                unsigned u = m;
                while (u % 2 == 0) {
                    u /= 2;
                    ++alpha;
                }
                expected = pow(one_plus_t, 1u << alpha) * sigma_prime_power({t, 2 * r}) *
                           pow(sigma_prime_power({t, u - 1}), 1u << alpha);
            }
            EXPECT_EQ(sigma_2star_prime_power({t, a}), expected) << format(t) << " a=" << a;
        }
    }
}

TEST(DivisorSumProperty, PrimeNeverDividesItsSigma2Star) {
    for (const auto& t : kSmallPrimes) {
        for (unsigned c = 0; c <= 64; ++c) EXPECT_FALSE(divides(t, sigma_2star_prime_power({t, c})));
    }
}

// --- scans over exponents ---

bool splits(const Gf2Poly& p) {
    const auto f = factorize(p);
    return std::all_of(f.factors().begin(), f.factors().end(),
                       [](const PrimePower& pp) { return *pp.base.degree() == 1; });
}

// Odd prime factors of p, and whether all of them are Mersenne primes.
struct OddPart {
    std::vector<Gf2Poly> primes;
    bool all_mersenne = true;
};

OddPart odd_part(const Gf2Poly& p) {
    OddPart out;
    for (const auto& pp : factorize(p).factors()) {
        if (!is_odd(pp.base)) continue;
        out.primes.push_back(pp.base);
        if (!is_mersenne_prime(pp.base)) out.all_mersenne = false;
    }
    return out;
}

bool all_in(const std::vector<Gf2Poly>& primes, const std::vector<Gf2Poly>& allowed) {
    return std::all_of(primes.begin(), primes.end(), [&](const Gf2Poly& p) {
        return std::find(allowed.begin(), allowed.end(), p) != allowed.end();
    });
}

const std::vector<Gf2Poly> kM = {kM1, kM2, kM3, kM4, kM5};

TEST(Sigma2StarScan, SplittingExponentsOfX) {
    std::set<unsigned> found;
    for (unsigned a = 1; a <= 200; ++a) {
        if (splits(sigma_2star_prime_power({kX, a}))) found.insert(a);
    }
    EXPECT_EQ(found, (std::set<unsigned>{1, 2, 3, 7, 15, 31, 63, 127}));
}

TEST(Sigma2StarScan, SplittingForOddIrreducibles) {
    for (unsigned d = 2; d <= 6; ++d) {
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << d); ++k) {
            const Gf2Poly t = poly_of((std::uint64_t{1} << d) | k);
            if (!is_odd(t) || !is_irreducible(t)) continue;
            const bool mersenne = is_mersenne_prime(t).has_value();
            for (unsigned c = 1; c <= 32; ++c) {
                const bool shape = c == 2 || std::has_single_bit(c + 1);
                EXPECT_EQ(splits(sigma_2star_prime_power({t, c})), mersenne && shape) << format(t) << " c=" << c;
            }
        }
    }
}

TEST(Sigma2StarScan, EvenPowersOfXWithMersenneOddPart) {
    std::set<unsigned> nontrivial;
    std::set<unsigned> vacuous;
    for (unsigned m2 = 2; m2 <= 64; m2 += 2) {
        const auto odd = odd_part(sigma_2star_prime_power({kX, m2}));
        if (!odd.all_mersenne) continue;
        (odd.primes.empty() ? vacuous : nontrivial).insert(m2);
        EXPECT_TRUE(all_in(odd.primes, kM)) << m2;
    }
    EXPECT_EQ(nontrivial, (std::set<unsigned>{4, 6, 8, 10, 12, 14}));
    EXPECT_EQ(vacuous, (std::set<unsigned>{2}));
}

TEST(Sigma2StarScan, OddPowersOfXWithMersenneOddPart) {
    for (unsigned e = 1; e <= 127; e += 2) {
        const auto odd = odd_part(sigma_2star_prime_power({kX, e}));
        const unsigned u = odd_exponent_form(e).u;
        EXPECT_EQ(odd.all_mersenne, u == 1 || u == 3 || u == 5 || u == 7) << e;
        EXPECT_EQ(odd.primes.empty(), u == 1) << e;
        if (odd.all_mersenne) { EXPECT_TRUE(all_in(odd.primes, kM)) << e; }
    }
}

TEST(Sigma2StarScan, PowersOfSmallMersennePrimes) {
    const std::vector<Gf2Poly> m145 = {kM1, kM4, kM5};
    for (std::size_t i = 0; i < kM.size(); ++i) {
        const bool m2_or_m3 = i == 1 || i == 2;
        for (unsigned e = 1; e <= 64; ++e) {
            const auto odd = odd_part(sigma_2star_prime_power({kM[i], e}));
            const bool nontrivial_mersenne = odd.all_mersenne && !odd.primes.empty();
            bool expected = false;
            if (e % 2 == 0) {
                expected = m2_or_m3 && (e == 4 || e == 6);
            } else {
                const auto f = odd_exponent_form(e);
                expected = m2_or_m3 && f.u == 3;
            }
            EXPECT_EQ(nontrivial_mersenne, expected) << "M" << i + 1 << " e=" << e;
            if (nontrivial_mersenne) { EXPECT_TRUE(all_in(odd.primes, m145)) << "M" << i + 1 << " e=" << e; }
            EXPECT_EQ(odd.primes.empty(), e == 2 || std::has_single_bit(e + 1)) << "M" << i + 1 << " e=" << e;

            // Neither M2 nor M3 divides sigma**(M_j^e) once its odd part is all Mersenne.
            const Gf2Poly s = sigma_2star_prime_power({kM[i], e});
            if (odd.all_mersenne) {
                EXPECT_FALSE(divides(kM2, s) || divides(kM3, s)) << "M" << i + 1 << " e=" << e;
            }
        }
    }
}

TEST(Sigma2StarScan, SigmaOfSmallMersenneEvenPowers) {
    for (std::size_t i = 0; i < kM.size(); ++i) {
        for (unsigned m2 = 2; m2 <= 32; m2 += 2) {
            const auto odd = odd_part(sigma_prime_power({kM[i], m2}));
            EXPECT_EQ(odd.all_mersenne, m2 == 2 && (i == 1 || i == 2)) << "M" << i + 1 << " 2m=" << m2;
            if (odd.all_mersenne) { EXPECT_TRUE(all_in(odd.primes, {kM1, kM4, kM5})); }
        }
    }
}

TEST(Sigma2StarScan, M2DividesOnlyForSpecialExponents) {
    std::set<unsigned> found;
    for (unsigned a = 1; a <= 200; ++a) {
        const Gf2Poly s = sigma_2star_prime_power({kX, a});
        if (!divides(kM2, s)) continue;
        EXPECT_TRUE(divides(kM3, s)) << a;
        if (odd_part(s).all_mersenne) found.insert(a);
    }
    EXPECT_EQ(found, (std::set<unsigned>{12, 13, 14, 27, 55, 111}));
}

// Without the Mersenne hypothesis both statements above fail early.
TEST(Sigma2StarScan, HypothesisIsNeeded) {
    EXPECT_TRUE(divides(kM2, sigma_2star_prime_power({kX, 26})));
    EXPECT_TRUE(divides(kM2, sigma_2star_prime_power({kM1, 12})));
}

TEST(Sigma2StarScan, NonMersenneDivisorForLargeEvenPowers) {
    for (unsigned j : {0u, 3u, 4u}) {
        for (unsigned r = 2; r <= 16; ++r) {
            EXPECT_FALSE(odd_part(sigma_2star_prime_power({kM[j], 2 * r})).all_mersenne) << "M" << j + 1 << " r=" << r;
        }
    }
}

TEST(EqualityTable, SevenIdentities) {
    for (const auto& t : kSmallPrimes) {
        const Gf2Poly u = t + kOne;
        auto s = [&](unsigned e) { return sigma_prime_power({t, e}); };
        auto ss = [&](unsigned e) { return sigma_2star_prime_power({t, e}); };
        EXPECT_EQ(ss(2), pow(u, 2));
        EXPECT_EQ(ss(4), pow(u, 2) * s(2));
        EXPECT_EQ(ss(6), pow(u, 4) * s(2));
        EXPECT_EQ(ss(8), pow(u, 4) * s(4));
        EXPECT_EQ(ss(10), pow(u, 2) * pow(s(2), 2) * s(4));
        EXPECT_EQ(ss(12), pow(u, 2) * pow(s(2), 2) * s(6));
        EXPECT_EQ(ss(14), pow(u, 8) * s(6));
    }
}

TEST(SigmaScan, EqualUnderConjugation) {
    std::set<unsigned> found;
    for (unsigned h = 0; h <= 62; ++h) {
        if (sigma_prime_power({kX, h}) == sigma_prime_power({kXp1, h})) found.insert(h);
    }
    EXPECT_EQ(found, (std::set<unsigned>{0, 2, 6, 14, 30, 62}));
}

TEST(SigmaScan, NoPrimePowerSigmaOfEvenPowers) {
    for (unsigned d = 2; d <= 5; ++d) {
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << d); ++k) {
            const Gf2Poly p = poly_of((std::uint64_t{1} << d) | k);
            if (!is_odd(p) || !is_irreducible(p)) continue;
            for (unsigned n = 1; n <= 6; ++n) {
                const auto f = factorize(sigma_prime_power({p, 2 * n}));
                if (f.omega() == 1) { EXPECT_EQ(f.factors()[0].exp, 1u) << format(p) << " n=" << n; }
            }
        }
    }
}

TEST(SigmaScan, TwoFactorSigmaWithConjugateSigma) {
    for (unsigned n = 1; n <= 32; ++n) {
        const auto f = factorize(sigma_prime_power({kX, 2 * n}));
        if (f.omega() != 2 || f.factors()[0].exp != 1 || f.factors()[1].exp != 1) continue;
        for (int swap = 0; swap < 2; ++swap) {
            const Gf2Poly& p = f.factors()[swap].base;
            const Gf2Poly& q = f.factors()[1 - swap].base;
            for (unsigned m = 1; m <= 32; ++m) {
                if (conjugate(p) != sigma_prime_power({kX, 2 * m})) continue;
                EXPECT_EQ(n, 4u);
                EXPECT_EQ(m, 1u);
                Gf2Poly p_of_x3;
                for (std::size_t i = 0; i <= *p.degree(); ++i) {
                    if (p.coeff(i)) p_of_x3 += Gf2Poly::monomial(3 * i);
                }
                EXPECT_EQ(q, p_of_x3);
            }
        }
    }
}

}  // namespace
}  // namespace gf2bup
