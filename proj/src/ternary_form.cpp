#include "fgsp6/ternary_form.hpp"

#include <sstream>

namespace fgsp6 {

MatQ TernaryForm::half_integral_matrix() const {
    MatQ t(3, 3);
    t(0, 0) = Rational(a);
    t(1, 1) = Rational(b);
    t(2, 2) = Rational(c);
    t(1, 2) = t(2, 1) = Rational(d) / 2;
    t(0, 2) = t(2, 0) = Rational(e) / 2;
    t(0, 1) = t(1, 0) = Rational(f) / 2;
    return t;
}

Integer TernaryForm::four_det() const {
    return 4 * a * b * c + d * e * f - a * d * d - b * e * e - c * f * f;
}

bool TernaryForm::is_positive_definite() const {
    // leading principal minors of 2T
    if (2 * a <= 0) return false;
    if (4 * a * b - f * f <= 0) return false;
    return four_det() > 0;
}

Rational TernaryForm::evaluate(const Rational& x, const Rational& y, const Rational& z) const {
    return Rational(a) * x * x + Rational(b) * y * y + Rational(c) * z * z + Rational(d) * y * z +
           Rational(e) * z * x + Rational(f) * x * y;
}

std::string TernaryForm::to_string() const {
    std::ostringstream os;
    os << a << " " << b << " " << c << " " << d << " " << e << " " << f;
    return os.str();
}

TernaryForm TernaryForm::from_string(const std::string& line) {
    std::istringstream is(line);
    std::string tok;
    std::array<Integer, 6> v;
    for (int i = 0; i < 6; ++i) {
        if (!(is >> tok)) throw std::invalid_argument("ternary form needs six integers");
        try {
            v[i] = Integer(tok);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad integer in ternary form: '" + tok + "'");
        }
    }
    if (is >> tok) throw std::invalid_argument("ternary form needs exactly six integers");
    return TernaryForm(v[0], v[1], v[2], v[3], v[4], v[5]);
}

}  // namespace fgsp6
