#ifndef FGSP6_CLIFFORD_HPP
#define FGSP6_CLIFFORD_HPP

#include <array>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fgsp6/jordan.hpp"
#include "fgsp6/linalg.hpp"
#include "fgsp6/quat.hpp"
#include "fgsp6/ternary_form.hpp"

namespace fgsp6 {

// Structure constants of a basis {1, w1, w2, w3} of a quaternion ring:
// w_i w_j = s0[i][j] + sum_k s[i][j][k] w_{k+1}.
struct StructureConstants {
    Rational s0[3][3];
    Rational s[3][3][3];

    // rows (s_23^*, s_31^*, s_12^*); symmetry is forced by the ring axioms
    MatQ shift_matrix() const {
        MatQ m(3, 3);
        for (int k = 0; k < 3; ++k) {
            m(0, k) = s[1][2][k];
            m(1, k) = s[2][0][k];
            m(2, k) = s[0][1][k];
        }
        return m;
    }
};

// Structure constants of the basis {1, w1, w2, w3} of the given ring.
// Throws if the elements do not form a basis together with 1.
StructureConstants structure_constants(const std::array<QuatQ, 3>& w);

// The unique shifts (x1, x2, x3) with v_i = w_i - x_i a good basis.
// Throws std::invalid_argument when the shift matrix is not symmetric.
std::array<Rational, 3> good_basis_shift(const StructureConstants& sc);

struct GoodBasedOrder {
    RingPtr ring;
    TernaryForm form;
};

inline GoodBasedOrder order_from_form(const TernaryForm& t) { return {ring_from_form(t), t}; }

// A(T): diagonal (a, b, c), off-diagonal entries the good basis (v1, v2, v3).
// Rank one in H3(B).
JElement<Rational> a_matrix(const GoodBasedOrder& o);

// 4 det(T)
inline Rational reduced_discriminant(const TernaryForm& t) { return Rational(t.four_det()); }

bool is_squarefree(const Integer& n);

// Maximality of the (definite) order: |4 det T| squarefree.
bool is_maximal(const TernaryForm& t);

// c(m) = det(m) m^{-T}
MatQ cofactor_matrix(const MatQ& m);

// T' = m^{-1} T c(m), as the (possibly rational) sextuple (a,b,c,d,e,f).
std::array<Rational, 6> suborder_form_rational(const TernaryForm& t, const MatQ& m);

// true iff m is integral and m^{-1} T c(m) is half-integral
bool suborder_test(const TernaryForm& t, const MatQ& m);

// m^{-1} A(T) c(m) computed in M3(B) over Q
JElement<Rational> transformed_a_matrix(const GoodBasedOrder& o, const MatQ& m);

// all 15 coordinates of m^{-1} A(T) c(m) integral
bool transformed_a_matrix_integral(const GoodBasedOrder& o, const MatQ& m);

// Brute-force closure of the lattice Z + Z w1 + Z w2 + Z w3, w_i = sum_j m(j,i) v_j.
bool lattice_closed_under_multiplication(const RingPtr& ring, const MatQ& m);

struct Suborder {
    MatQ hnf;          // upper triangular, 0 <= m_ij < m_ii for j > i
    TernaryForm form;  // the suborder's good-basis form
    Integer index;     // = det(hnf)
};

// all column-style HNF matrices with 1 <= det <= bound, deterministic order
std::vector<MatQ> hnf_matrices(long det_bound);

std::vector<Suborder> enumerate_suborders(const TernaryForm& t, long index_bound);

// integer vectors x != 0 with q_T(x) <= bound (T positive definite)
std::vector<std::array<long, 3>> short_vectors(const TernaryForm& t, const Rational& bound);

// T -> k^{-1} T (tk)^{-1} for unimodular k, i.e. det(k) k^{-1} T c(k); the
// GL3(Z) action on forms.  k must be integral with det +-1.
TernaryForm transform_form(const TernaryForm& t, const MatQ& k);

// A witness k in GL3(Z) with det(k) k^{-1} T1 c(k) = T2, or nullopt.
std::optional<MatQ> forms_equivalent(const TernaryForm& t1, const TernaryForm& t2);

// Deterministic class key: lexicographically least form reachable through
// unimodular transforms built from short vectors, iterated to a fixed point.
TernaryForm canonical_class_form(const TernaryForm& t);

struct MissingClassError : std::runtime_error {
    explicit MissingClassError(const TernaryForm& t)
        : std::runtime_error("no coefficient for form class: " + t.to_string()), missing(t) {}
    TernaryForm missing;
};

// Fourier-coefficient table keyed by canonical class forms.
// File format: TSV/whitespace lines "a b c d e f value", '#' comments.
class CoefficientTable {
public:
    void set(const TernaryForm& t, const Rational& value);
    const Rational& get(const TernaryForm& t) const;  // throws MissingClassError
    static CoefficientTable parse(std::istream& in);
    std::size_t size() const { return by_class_.size(); }

private:
    std::map<TernaryForm, Rational> by_class_;
};

// Coefficients of the suborder Dirichlet sum: the (lambda, O) term lands at
// n = lambda * [B0 : O] with weight a(lambda T_O) [B0 : O]^{2r - 3}.
std::vector<std::pair<long, Rational>> dirichlet_coefficients(const TernaryForm& t, long weight,
                                                              const CoefficientTable& coeffs,
                                                              long max_n);

// Index-n superorder witness: x = (k0 + k1 v1 + k2 v2 + k3 v3)/n with
// Z + Z v1 + Z v2 + Z v3 + Z x closed under multiplication, if one exists.
std::optional<std::array<Rational, 4>> find_superorder(const TernaryForm& t, long n);

}  // namespace fgsp6

#endif
