#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gdiff {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Parse "p" or "p/q" into a canonical rational. Throws std::invalid_argument on garbage.
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

/// Canonical form: "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rational& q) { return q.get_str(); }

/// Element of Q(i), kept exact componentwise.
struct GaussRat {
    Rational re{0};
    Rational im{0};

    GaussRat() = default;
    GaussRat(Rational r) : re(std::move(r)) {}
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

    GaussRat conj() const { return {re, -im}; }

    GaussRat inverse() const {
        Rational n = re * re + im * im;
        if (n == 0) throw std::domain_error("division by zero in Q(i)");
        return {re / n, -im / n};
    }
    GaussRat operator/(const GaussRat& o) const { return *this * o.inverse(); }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
};

inline GaussRat operator*(const Rational& c, const GaussRat& z) { return {c * z.re, c * z.im}; }
inline GaussRat operator*(const BigInt& c, const GaussRat& z) {
    Rational q(c);
    return {q * z.re, q * z.im};
}

inline std::string to_string(const GaussRat& z) {
    if (z.im == 0) return format_rational(z.re);
    std::string s = format_rational(z.re);
    s += (z.im > 0) ? "+" : "-";
    s += format_rational(abs(z.im));
    s += "i";
    return s;
}

}  // namespace gdiff
