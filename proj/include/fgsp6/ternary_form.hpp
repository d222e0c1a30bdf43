#ifndef FGSP6_TERNARY_FORM_HPP
#define FGSP6_TERNARY_FORM_HPP

#include <array>
#include <string>

#include "fgsp6/linalg.hpp"
#include "fgsp6/scalar.hpp"

namespace fgsp6 {

// Integer ternary quadratic form q(x,y,z) = ax^2 + by^2 + cz^2 + dyz + ezx + fxy,
// equivalently the half-integral symmetric matrix
//   T = [ a  f/2 e/2 ; f/2 b d/2 ; e/2 d/2 c ].
struct TernaryForm {
    Integer a{0}, b{0}, c{0}, d{0}, e{0}, f{0};

    TernaryForm() = default;
    TernaryForm(Integer a_, Integer b_, Integer c_, Integer d_, Integer e_, Integer f_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), e(std::move(e_)), f(std::move(f_)) {}
    TernaryForm(long a_, long b_, long c_, long d_, long e_, long f_)
        : a(a_), b(b_), c(c_), d(d_), e(e_), f(f_) {}

    std::array<Integer, 6> sextuple() const { return {a, b, c, d, e, f}; }

    MatQ half_integral_matrix() const;

    // 4*det(T) = 4abc + def - ad^2 - be^2 - cf^2; the reduced discriminant of
    // the associated quaternion order.
    Integer four_det() const;

    // Leading principal minors of 2T all positive.
    bool is_positive_definite() const;

    Rational evaluate(const Rational& x, const Rational& y, const Rational& z) const;

    friend bool operator==(const TernaryForm& s, const TernaryForm& t) {
        return s.a == t.a && s.b == t.b && s.c == t.c && s.d == t.d && s.e == t.e && s.f == t.f;
    }
    friend bool operator!=(const TernaryForm& s, const TernaryForm& t) { return !(s == t); }
    friend bool operator<(const TernaryForm& s, const TernaryForm& t) {
        auto l = s.sextuple(), r = t.sextuple();
        for (int i = 0; i < 6; ++i)
            if (l[i] != r[i]) return l[i] < r[i];
        return false;
    }

    // "a b c d e f"
    std::string to_string() const;
    static TernaryForm from_string(const std::string& line);
};

}  // namespace fgsp6

#endif
