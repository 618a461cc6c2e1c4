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

#ifndef GF2BUP_POLY_HPP
#define GF2BUP_POLY_HPP

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gf2bup {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

namespace detail {

__extension__ typedef unsigned __int128 U128;

// 64x64 -> 128 carry-less product, 4-bit window over b.
struct WindowTable {
    U128 entry[16];

    explicit WindowTable(Word a) noexcept {
        entry[0] = 0;
        entry[1] = a;
        for (unsigned i = 2; i < 16; ++i) {
            entry[i] = (i & 1u) ? (entry[i - 1] ^ entry[1]) : (entry[i / 2] << 1);
        }
    }

    U128 times(Word b) const noexcept {
        U128 r = 0;
        for (int s = 60; s >= 0; s -= 4) {
            r = (r << 4) ^ entry[(b >> s) & 0xFu];
        }
        return r;
    }
};

inline std::pair<Word, Word> clmul64(Word a, Word b) noexcept {
    const U128 r = WindowTable(a).times(b);
    return {static_cast<Word>(r), static_cast<Word>(r >> 64)};
}

// Interleave a zero bit above every bit of v (the Frobenius square of one half-word).
inline Word spread32(std::uint32_t v) noexcept {
    Word x = v;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

// Inverse of spread32 applied to the even bits of w.
inline std::uint32_t compact32(Word w) noexcept {
    Word x = w & 0x5555555555555555ull;
    x = (x | (x >> 1)) & 0x3333333333333333ull;
    x = (x | (x >> 2)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x >> 4)) & 0x00FF00FF00FF00FFull;
    x = (x | (x >> 8)) & 0x0000FFFF0000FFFFull;
    x = (x | (x >> 16)) & 0x00000000FFFFFFFFull;
    return static_cast<std::uint32_t>(x);
}

// dst ^= src * x^shift; dst must be large enough.
inline void xor_shifted(std::vector<Word>& dst, std::span<const Word> src, std::size_t shift) noexcept {
    const std::size_t ws = shift / kWordBits;
    const unsigned bs = static_cast<unsigned>(shift % kWordBits);
    if (bs == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + ws] ^= src[i];
        return;
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + ws] ^= src[i] << bs;
        if (i + ws + 1 < dst.size()) dst[i + ws + 1] ^= src[i] >> (kWordBits - bs);
    }
}

}  // namespace detail

/// Polynomial over the two-element field, stored as little-endian 64-bit words
/// (bit i is the coefficient of x^i). The representation carries no trailing
/// zero words, so the zero polynomial is the empty word vector.
class Gf2Poly {
  public:
    Gf2Poly() = default;

    static Gf2Poly from_words(std::vector<Word> words) {
        Gf2Poly p;
        p.words_ = std::move(words);
        p.trim();
        return p;
    }
    static Gf2Poly from_uint(std::uint64_t bits) { return from_words({bits}); }
    static Gf2Poly one() { return from_uint(1); }
    static Gf2Poly x() { return from_uint(2); }
    static Gf2Poly monomial(std::size_t k) {
        std::vector<Word> w(k / kWordBits + 1, 0);
        w.back() = Word{1} << (k % kWordBits);
        return from_words(std::move(w));
    }

    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (words_.empty()) return std::nullopt;
        return (words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(words_.back()));
    }

    bool coeff(std::size_t i) const noexcept {
        const std::size_t w = i / kWordBits;
        return w < words_.size() && ((words_[w] >> (i % kWordBits)) & 1u);
    }

    std::span<const Word> words() const noexcept { return words_; }

    std::size_t weight() const noexcept {
        std::size_t n = 0;
        for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    /// Value of the polynomial at x = 0 (resp. x = 1).
    bool at_zero() const noexcept { return coeff(0); }
    bool at_one() const noexcept { return weight() % 2 == 1; }

    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

    // Numeric order of the bit encodings: degree first, then lexicographic from the top.
    friend std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b) noexcept {
        if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
        for (std::size_t i = a.words_.size(); i-- > 0;) {
            if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
        }
        return std::strong_ordering::equal;
    }

    Gf2Poly& operator+=(const Gf2Poly& q) {
        if (q.words_.size() > words_.size()) words_.resize(q.words_.size(), 0);
        for (std::size_t i = 0; i < q.words_.size(); ++i) words_[i] ^= q.words_[i];
        trim();
        return *this;
    }

    friend Gf2Poly operator+(Gf2Poly p, const Gf2Poly& q) { return p += q; }
    friend Gf2Poly operator*(const Gf2Poly& p, const Gf2Poly& q);
    Gf2Poly& operator*=(const Gf2Poly& q) { return *this = *this * q; }

  private:
    void trim() noexcept {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }

    std::vector<Word> words_;
};

/// Error raised by parse(); position is a 0-based byte offset into the input.
class ParseError : public std::invalid_argument {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

inline Gf2Poly add(const Gf2Poly& p, const Gf2Poly& q) { return p + q; }

inline Gf2Poly operator*(const Gf2Poly& p, const Gf2Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const auto pw = p.words();
    const auto qw = q.words();
    std::vector<Word> out(pw.size() + qw.size(), 0);
    for (std::size_t i = 0; i < pw.size(); ++i) {
        if (pw[i] == 0) continue;
        const detail::WindowTable table(pw[i]);
        for (std::size_t j = 0; j < qw.size(); ++j) {
            const detail::U128 r = table.times(qw[j]);
            out[i + j] ^= static_cast<Word>(r);
            out[i + j + 1] ^= static_cast<Word>(r >> 64);
        }
    }
    return Gf2Poly::from_words(std::move(out));
}

inline Gf2Poly mul(const Gf2Poly& p, const Gf2Poly& q) { return p * q; }

inline Gf2Poly square(const Gf2Poly& p) {
    const auto pw = p.words();
    std::vector<Word> out(2 * pw.size(), 0);
    for (std::size_t i = 0; i < pw.size(); ++i) {
        out[2 * i] = detail::spread32(static_cast<std::uint32_t>(pw[i]));
        out[2 * i + 1] = detail::spread32(static_cast<std::uint32_t>(pw[i] >> 32));
    }
    return Gf2Poly::from_words(std::move(out));
}

/// Square root of a polynomial that is a perfect square (all odd-degree
/// coefficients zero). Throws std::domain_error otherwise.
inline Gf2Poly sqrt_of_square(const Gf2Poly& p) {
    const auto pw = p.words();
    std::vector<Word> out((pw.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < pw.size(); ++i) {
        if (pw[i] & 0xAAAAAAAAAAAAAAAAull) throw std::domain_error("sqrt_of_square: not a square");
        const Word half = detail::compact32(pw[i]);
        out[i / 2] |= (i % 2 == 0) ? half : (half << 32);
    }
    return Gf2Poly::from_words(std::move(out));
}

inline Gf2Poly shift_left(const Gf2Poly& p, std::size_t n) {
    if (p.is_zero()) return {};
    std::vector<Word> out(p.words().size() + n / kWordBits + 1, 0);
    detail::xor_shifted(out, p.words(), n);
    return Gf2Poly::from_words(std::move(out));
}

/// Formal derivative: keeps the odd-degree coefficients, lowered by one.
inline Gf2Poly derivative(const Gf2Poly& p) {
    const auto pw = p.words();
    std::vector<Word> out(pw.size(), 0);
    for (std::size_t i = 0; i < pw.size(); ++i) {
        out[i] = (pw[i] & 0xAAAAAAAAAAAAAAAAull) >> 1;
    }
    return Gf2Poly::from_words(std::move(out));
}

struct DivRem {
    Gf2Poly quotient;
    Gf2Poly remainder;
};

inline DivRem divrem(const Gf2Poly& p, const Gf2Poly& d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    const std::size_t dd = *d.degree();
    const auto pdeg = p.degree();
    if (!pdeg || *pdeg < dd) return {Gf2Poly{}, p};

    std::vector<Word> r(p.words().begin(), p.words().end());
    r.push_back(0);
    std::vector<Word> q((*pdeg - dd) / kWordBits + 1, 0);
    for (std::size_t i = *pdeg + 1; i-- > dd;) {
        if ((r[i / kWordBits] >> (i % kWordBits)) & 1u) {
            const std::size_t s = i - dd;
            q[s / kWordBits] |= Word{1} << (s % kWordBits);
            detail::xor_shifted(r, d.words(), s);
        }
    }
    return {Gf2Poly::from_words(std::move(q)), Gf2Poly::from_words(std::move(r))};
}

inline Gf2Poly operator/(const Gf2Poly& p, const Gf2Poly& d) { return divrem(p, d).quotient; }
inline Gf2Poly operator%(const Gf2Poly& p, const Gf2Poly& d) { return divrem(p, d).remainder; }

inline bool divides(const Gf2Poly& d, const Gf2Poly& p) { return (p % d).is_zero(); }

inline Gf2Poly gcd(Gf2Poly p, Gf2Poly q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    while (!q.is_zero()) {
        Gf2Poly r = p % q;
        p = std::move(q);
        q = std::move(r);
    }
    return p;
}

inline Gf2Poly pow(const Gf2Poly& p, std::uint64_t n) {
    Gf2Poly result = Gf2Poly::one();
    Gf2Poly base = p;
    while (n != 0) {
        if (n & 1u) result *= base;
        n >>= 1;
        if (n != 0) base = square(base);
    }
    return result;
}

inline Gf2Poly mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& f) { return (a * b) % f; }
inline Gf2Poly sqrmod(const Gf2Poly& a, const Gf2Poly& f) { return square(a) % f; }

/// p(x+1). Uses binom(i, j) = 1 (mod 2) iff the bits of j are a subset of
/// the bits of i, so the shift is a superset-sum transform over coefficient
/// indices.
inline Gf2Poly conjugate(const Gf2Poly& p) {
    if (p.is_zero()) return {};
    std::vector<Word> w(std::bit_ceil(p.words().size()), 0);
    std::copy(p.words().begin(), p.words().end(), w.begin());

    static constexpr Word kHigh[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };
    for (Word& word : w) {
        for (unsigned b = 0; b < 6; ++b) word ^= (word & kHigh[b]) >> (1u << b);
    }
    for (std::size_t step = 1; step < w.size(); step <<= 1) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i & step) w[i ^ step] ^= w[i];
        }
    }
    return Gf2Poly::from_words(std::move(w));
}

/// x^deg(p) * p(1/x). Throws std::domain_error on zero input.
inline Gf2Poly reciprocal(const Gf2Poly& p) {
    if (p.is_zero()) throw std::domain_error("reciprocal of the zero polynomial");
    const std::size_t n = *p.degree();
    std::vector<Word> w(n / kWordBits + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        if (p.coeff(i)) w[(n - i) / kWordBits] |= Word{1} << ((n - i) % kWordBits);
    }
    return Gf2Poly::from_words(std::move(w));
}

/// Largest k with x^k | p (p nonzero).
inline std::size_t trailing_zeros(const Gf2Poly& p) {
    const auto w = p.words();
    std::size_t i = 0;
    while (w[i] == 0) ++i;
    return i * kWordBits + static_cast<std::size_t>(std::countr_zero(w[i]));
}

// ---------------------------------------------------------------------------
// Text forms.

enum class Style { expanded, hex };

inline std::string format(const Gf2Poly& p, Style style = Style::expanded) {
    if (style == Style::hex) {
        static constexpr char kDigits[] = "0123456789abcdef";
        if (p.is_zero()) return "0x0";
        std::string digits;
        const std::size_t n = *p.degree() / 4 + 1;
        for (std::size_t k = n; k-- > 0;) {
            unsigned nibble = 0;
            for (unsigned b = 0; b < 4; ++b) nibble |= unsigned{p.coeff(4 * k + b)} << b;
            digits.push_back(kDigits[nibble]);
        }
        return "0x" + digits;
    }
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = *p.degree() + 1; i-- > 0;) {
        if (!p.coeff(i)) continue;
        if (!out.empty()) out.push_back('+');
        if (i == 0) {
            out.push_back('1');
        } else if (i == 1) {
            out.push_back('x');
        } else {
            out += "x^" + std::to_string(i);
        }
    }
    return out;
}

/// Upper bound on the degree of any polynomial produced by parse().
inline constexpr std::size_t kMaxParsedDegree = std::size_t{1} << 22;

namespace detail {

// Recursive descent over
//   expr    := product ('+' product)*
//   product := factor ('*' factor)*
//   factor  := atom ('^' uint)?
//   atom    := 'x' | '0' | '1' | hex | '(' expr ')'
// which accepts every sum and every product of the documented grammar.
class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Gf2Poly parse_all() {
        Gf2Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                       text_[pos_] == '\r')) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Gf2Poly expr() {
        Gf2Poly sum = product();
        while (accept('+')) sum += product();
        return sum;
    }

    Gf2Poly product() {
        Gf2Poly prod = factor();
        while (accept('*')) {
            prod *= factor();
            check_degree(prod);
        }
        return prod;
    }

    Gf2Poly factor() {
        Gf2Poly base = atom();
        if (!accept('^')) return base;
        skip_ws();
        const std::uint64_t e = uint_literal();
        if (!base.is_zero() && *base.degree() > 0 && e > kMaxParsedDegree / *base.degree()) {
            fail("exponent overflow");
        }
        if (base.is_zero() || *base.degree() == 0) return e == 0 ? Gf2Poly::one() : base;
        return pow(base, e);
    }

    Gf2Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == 'x') {
            ++pos_;
            return Gf2Poly::x();
        }
        if (c == '0' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'x') return hex_literal();
        if (c == '0' || c == '1') {
            ++pos_;
            return c == '1' ? Gf2Poly::one() : Gf2Poly{};
        }
        if (c == '(') {
            ++pos_;
            Gf2Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail("expected 'x', '0', '1' or '('");
    }

    std::uint64_t uint_literal() {
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > kMaxParsedDegree) {
                pos_ = start;
                fail("exponent overflow");
            }
            ++pos_;
        }
        if (pos_ == start) fail("expected an unsigned exponent");
        return v;
    }

    Gf2Poly hex_literal() {
        pos_ += 2;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isxdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected hexadecimal digits");
        const std::string_view digits = text_.substr(start, pos_ - start);
        if (digits.size() * 4 > kMaxParsedDegree + 4) fail("hex literal too long");
        std::vector<Word> w((digits.size() * 4 + kWordBits - 1) / kWordBits, 0);
        for (std::size_t k = 0; k < digits.size(); ++k) {
            const char d = digits[digits.size() - 1 - k];
            const Word nibble = static_cast<Word>(
                d <= '9' ? d - '0' : (d | 0x20) - 'a' + 10);
            w[(4 * k) / kWordBits] |= nibble << ((4 * k) % kWordBits);
        }
        return Gf2Poly::from_words(std::move(w));
    }

    void check_degree(const Gf2Poly& p) const {
        if (p.degree() && *p.degree() > kMaxParsedDegree) fail("exponent overflow");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the polynomial text grammar (sums of monomials, factored products,
/// or a 0x-prefixed hex literal). Throws ParseError.
inline Gf2Poly parse(std::string_view text) { return detail::Parser(text).parse_all(); }

}  // namespace gf2bup

#endif  // GF2BUP_POLY_HPP
