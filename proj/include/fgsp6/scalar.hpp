#ifndef FGSP6_SCALAR_HPP
#define FGSP6_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fgsp6 {

// Exact rational scalar. mpq_class keeps values canonical (positive
// denominator, reduced), which the text formats below rely on.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string rat_to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

// Element of Q(i).  sigma() is the complex conjugation; it fixes exactly
// the elements with zero imaginary part.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(const Rational& r) : re(r), im(0) {}  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_real() const { return im == 0; }
    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational sigma() const { return {re, -im}; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.re * o.re + o.im * o.im;
        if (n == 0) throw std::domain_error("division by zero in Q(i)");
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = std::move(r);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// Serialized as "re+im*I" with rational parts, e.g. "1/2-3*I".
inline std::string cscalar_to_string(const GaussianRational& z) {
    std::string s = rat_to_string(z.re);
    if (z.im >= 0) s += "+";
    s += rat_to_string(z.im) + "*I";
    return s;
}

inline GaussianRational cscalar_from_string(const std::string& s) {
    auto star = s.rfind("*I");
    if (star == std::string::npos || star + 2 != s.size())
        return GaussianRational(rat_from_string(s));
    // split "re" and "im" at the sign separating them (not the leading sign,
    // not a sign inside "p/q" which never contains one past position 0)
    std::string body = s.substr(0, star);
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '+' && body[k - 1] != '-') {
            std::string re = body.substr(0, k);
            std::string im = (body[k] == '+') ? body.substr(k + 1) : body.substr(k);
            return {rat_from_string(re), rat_from_string(im)};
        }
    }
    return {Rational(0), rat_from_string(body)};
}

// Generic hooks shared by code templated over Rational / GaussianRational.
inline Rational sigma(const Rational& x) { return x; }
inline GaussianRational sigma(const GaussianRational& x) { return x.sigma(); }

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const GaussianRational& x) { return x.is_zero(); }

inline std::string scalar_to_string(const Rational& x) { return rat_to_string(x); }
inline std::string scalar_to_string(const GaussianRational& x) { return cscalar_to_string(x); }

}  // namespace fgsp6

#endif
