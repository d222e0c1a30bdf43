#ifndef FGSP6_HERMSPACE_HPP
#define FGSP6_HERMSPACE_HPP

#include "fgsp6/gsp6.hpp"
#include "fgsp6/group.hpp"

namespace fgsp6 {

using CScalar = GaussianRational;
using CJ = JElement<CScalar>;
using CW = WElement<CScalar>;

CJ complexify(const JElement<Rational>& h);
CW complexify_w(const WQ& w);

// (Z - sigma Z) / (2i); always a real element of H3(B)
JElement<Rational> imaginary_part(const CJ& z);

// i * 1_3
CJ i_identity(const RingPtr& ring);

// Z = X + iY with Y positive definite.  Positivity is certified through the
// principal minors c_i, c_i c_j - n(a_k) and the norm of Y.
struct PointH {
    CJ z;
    static PointH checked(CJ z);
};

// r(Z) = e n(-Z) = (1, -Z, Z^#, -N(Z)), a rank-one vector over Q(i)
CW r_of(const CJ& z);

// j(g, Z) = <r(Z) g^{-1}, f>; needs nu(g) > 0, nonzero on the verified domain
CScalar j_factor(const GroupElement& g, const PointH& z);

// g Z from r(Z) g^{-1} = j(g,Z) r(gZ); asserts the sharp/norm slots and the
// positivity of the imaginary part
PointH act_on_h(const GroupElement& g, const PointH& z);

// ||v||^2 = <v, v J6>
template <class K>
K norm_sq(const WElement<K>& v) {
    return symplectic(v, apply_j6(v));
}

// |<r(i), v>|^2 = ||v||^2 for real rank-one v
void check_rk1_norm(const WQ& v);

// N(Im(W)) = (1/8i) <sigma r(W), r(W)>
void im_norm_identity_check(const CJ& z);

// tr(T Z) for Z in the embedded complex-symmetric subspace of H3(B_C)
CScalar trace_t_z(const TernaryForm& t, const CJ& z);

// nu(g)^{-1} j(g,i)^{-1} <r(i), f_O g> = tr(T (g i)) for Siegel-parabolic g
void f_order_eqn_check(const GoodBasedOrder& o, const GSp6Element& g);

// The cubic-operator core identity: with J = <r(i), f g>, h = n(i) nbar(i/2)
// and v = 8i J f g h, the slots satisfy a = |J|^2, d = 8i J^2, v is rank one,
// and N(b) - 3 tr(b,c) + 15 d = 8i (|J|^4 - 9|J|^2 + 15) J^2.
struct CubicCoreReport {
    CScalar j;
    CW v;
};
CubicCoreReport cubic_core_check(const GroupElement& g);

}  // namespace fgsp6

#endif
