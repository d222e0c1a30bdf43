#ifndef FGSP6_GSP6_HPP
#define FGSP6_GSP6_HPP

#include <array>
#include <stdexcept>

#include "fgsp6/clifford.hpp"
#include "fgsp6/group.hpp"

namespace fgsp6 {

// g J6 tg = nu J6 with J6 = [[0, 1_3], [-1_3, 0]]; right action on row vectors.
struct GSp6Element {
    MatQ g;
    Rational nu;

    static GSp6Element checked(MatQ m);

    bool is_siegel_parabolic() const {  // lower-left block zero
        for (int i = 3; i < 6; ++i)
            for (int j = 0; j < 3; ++j)
                if (g(i, j) != 0) return false;
        return true;
    }
};

MatQ gsp6_j6_matrix();                                        // [[0,1],[-1,0]]
GSp6Element gsp6_unipotent(const MatQ& u);                    // [[1,u],[0,1]], u symmetric
GSp6Element gsp6_levi(const Rational& lambda, const MatQ& m); // (lambda, m) block element

// element of W projected off the third wedge power is not in the image
struct NotInImage : std::domain_error {
    explicit NotInImage(const std::string& w) : std::domain_error(w) {}
};

// Coefficients on the 20 lexicographic 3-subsets of (e1, e2, e3, f1, f2, f3).
template <class K>
struct Wedge3 {
    RingPtr ring;
    std::array<QuaternionElement<K>, 20> coef;

    explicit Wedge3(RingPtr r) : ring(r) {
        for (auto& q : coef) q = QuaternionElement<K>(r);
    }
};

namespace wedge_detail {
// subset/index tables for the 20 basis monomials
int subset_index(int g1, int g2, int g3);               // sorted distinct generators
const std::array<std::array<int, 3>, 20>& subsets();
// sorted position + sign of an arbitrary distinct triple
struct Sorted {
    int index;
    int sign;
};
Sorted sort_wedge(int g1, int g2, int g3);
}  // namespace wedge_detail

// (a,b,c,d) -> a e123 + sum b_ij e_i^* ^ f_j + sum c_ij f_i^* ^ e_j + d f123,
// with e_i^* = e_{i+1} ^ e_{i+2}, f_i^* = f_{i+1} ^ f_{i+2} (indices mod 3).
template <class K>
Wedge3<K> embed_w(const WElement<K>& v);

// Inverse of embed_w on its image; throws NotInImage off the image
// (non-Hermitian blocks or non-scalar top/bottom coefficients).
template <class K>
WElement<K> project_w(const Wedge3<K>& x);

// The embedding GSp6 -> G over the given coefficient ring: the third wedge
// power of g twisted by nu(g)^{-1}, restricted to the image of W.
GroupElement iota(const GSp6Element& g, const RingPtr& ring);

// L(X), the infinitesimal translation (a,b,c,d) -> (0, aX, b x X, tr(c,X)).
MatQ translation_log_matrix(const JElement<Rational>& x);

// f_O = (0, 0, A(T), 0)
WQ f_order(const GoodBasedOrder& o);

// f_O . iota(n(u)) . iota(levi(lambda, m)); checked against the closed form
// (0, 0, m^{-1} A(T) c(m), tr(Tu)/lambda).
WQ f_order_action(const GoodBasedOrder& o, const MatQ& u, const Rational& lambda, const MatQ& m);

// 1 iff lambda is an integer, m is integral, and m^{-1} T c(m) is half-integral.
int xi_indicator(const TernaryForm& t, const Rational& lambda, const MatQ& m);

// whether iota(g) maps the line through f_O to itself
bool stabilizes_line(const GoodBasedOrder& o, const GSp6Element& g);

// rational symmetric 3x3 -> H3(Q) inside H3(B)
JElement<Rational> symmetric_to_j(const RingPtr& ring, const MatQ& u);

}  // namespace fgsp6

#endif
