#include "fgsp6/hermspace.hpp"

namespace fgsp6 {
namespace {

const CScalar kI = CScalar::i();

}  // namespace

CJ complexify(const JElement<Rational>& h) {
    CJ z(h.ring);
    for (int i = 0; i < 15; ++i) z.coord(i) = CScalar(h.coord(i));
    return z;
}

CW complexify_w(const WQ& w) {
    CW z(w.ring());
    for (int i = 0; i < 32; ++i) z.coord(i) = CScalar(w.coord(i));
    return z;
}

JElement<Rational> imaginary_part(const CJ& z) {
    JElement<Rational> y(z.ring);
    CScalar inv2i(Rational(0), Rational(-1, 2));  // 1/(2i)
    for (int i = 0; i < 15; ++i) {
        CScalar c = (z.coord(i) - sigma(z.coord(i))) * inv2i;
        if (!c.is_real()) throw std::logic_error("imaginary part not real");
        y.coord(i) = c.re;
    }
    return y;
}

CJ i_identity(const RingPtr& ring) {
    CJ z(ring);
    z.c = {kI, kI, kI};
    return z;
}

PointH PointH::checked(CJ z) {
    JElement<Rational> y = imaginary_part(z);
    for (int i = 0; i < 3; ++i) {
        if (!(y.c[i] > 0)) throw std::domain_error("imaginary part has a non-positive diagonal");
        int j = (i + 1) % 3, k = (i + 2) % 3;
        if (!(y.c[i] * y.c[j] - y.a[k].norm() > 0))
            throw std::domain_error("imaginary part fails a principal 2x2 minor");
    }
    if (!(jnorm(y) > 0)) throw std::domain_error("imaginary part has non-positive norm");
    return PointH{std::move(z)};
}

CW r_of(const CJ& z) {
    return {CScalar(1), CScalar(-1) * z, sharp(z), CScalar(-1) * jnorm(z)};
}

CScalar j_factor(const GroupElement& g, const PointH& z) {
    if (!(g.nu() > 0)) throw std::domain_error("j factor needs positive similitude");
    CW w = g.inverse().apply(r_of(z.z));
    if (w.a.is_zero()) throw std::domain_error("degenerate point: vanishing factor of automorphy");
    return w.a;
}

PointH act_on_h(const GroupElement& g, const PointH& z) {
    if (!(g.nu() > 0)) throw std::domain_error("action needs positive similitude");
    CW w = g.inverse().apply(r_of(z.z));
    if (w.a.is_zero()) throw std::domain_error("degenerate point: vanishing factor of automorphy");
    const CScalar& j = w.a;
    CScalar minus_inv_j = CScalar(-1) / j;
    CJ gz = minus_inv_j * w.b;
    if (!(w.c == j * sharp(gz)) || !(w.d == CScalar(-1) * j * jnorm(gz)))
        throw VerificationError("Hermitian action: sharp/norm slots disagree");
    return PointH::checked(std::move(gz));
}

void check_rk1_norm(const WQ& v) {
    if (wrank(v) != 1) throw std::domain_error("norm identity needs a rank-one element");
    CW vc = complexify_w(v);
    CScalar p = symplectic(r_of(i_identity(v.ring())), vc);
    CScalar lhs = p * sigma(p);
    Rational nsq = norm_sq(v);
    if (!(lhs == CScalar(nsq)))
        throw VerificationError("|<r(i), v>|^2 differs from ||v||^2 on a rank-one element");
}

void im_norm_identity_check(const CJ& z) {
    CW r = r_of(z);
    CScalar rhs = symplectic(r.sigma_conj(), r);
    CScalar lhs = CScalar(Rational(8)) * kI * CScalar(jnorm(imaginary_part(z)));
    if (!(lhs == rhs)) throw VerificationError("N(Im W) = (1/8i)<sigma r(W), r(W)> fails");
}

CScalar trace_t_z(const TernaryForm& t, const CJ& z) {
    std::array<CScalar, 3> off;
    for (int s = 0; s < 3; ++s) {
        for (int k = 1; k < 4; ++k)
            if (!scalar_is_zero(z.a[s].x[k]))
                throw std::domain_error("tr(TZ) needs a complex-symmetric matrix");
        off[s] = z.a[s].x[0];
    }
    return CScalar(Rational(t.a)) * z.c[0] + CScalar(Rational(t.b)) * z.c[1] +
           CScalar(Rational(t.c)) * z.c[2] + CScalar(Rational(t.d)) * off[0] +
           CScalar(Rational(t.e)) * off[1] + CScalar(Rational(t.f)) * off[2];
}

void f_order_eqn_check(const GoodBasedOrder& o, const GSp6Element& g) {
    if (!g.is_siegel_parabolic()) throw std::domain_error("needs a Siegel-parabolic element");
    if (!(g.nu > 0)) throw std::domain_error("needs positive similitude");
    GroupElement ig = iota(g, o.ring);
    PointH zi = PointH::checked(i_identity(o.ring));
    CScalar j = j_factor(ig, zi);
    CW fo = complexify_w(f_order(o));
    CScalar pairing = symplectic(r_of(zi.z), ig.apply(fo));
    CScalar lhs = pairing / (CScalar(g.nu) * j);
    CScalar rhs = trace_t_z(o.form, act_on_h(ig, zi).z);
    if (!(lhs == rhs)) throw VerificationError("order-line pairing identity fails");
}

CubicCoreReport cubic_core_check(const GroupElement& g) {
    if (!(g.nu() > 0)) throw std::domain_error("needs positive similitude");
    const RingPtr& ring = g.ring();
    CJ zi = i_identity(ring);
    CW fg = complexify_w(g.apply(WQ::f(ring)));
    CScalar j = symplectic(r_of(zi), fg);
    if (j.is_zero()) throw std::domain_error("degenerate: <r(i), f g> vanishes");

    CScalar half_i(Rational(0), Rational(1, 2));
    CW v = apply_nbar(half_i * complexify(JElement<Rational>::identity(ring)), apply_n(zi, fg));
    CScalar scale = CScalar(Rational(8)) * kI * j;
    v = scale * v;

    CScalar jsq = j * sigma(j);
    if (!(v.a == jsq)) throw VerificationError("cubic core: a slot is not |J|^2");
    CScalar d_want = CScalar(Rational(8)) * kI * j * j;
    if (!(v.d == d_want)) throw VerificationError("cubic core: d slot is not 8i J^2");
    if (wrank(v) != 1) throw VerificationError("cubic core: v is not rank one");

    CScalar lhs = jnorm(v.b) - CScalar(Rational(3)) * trace_pair(v.b, v.c) +
                  CScalar(Rational(15)) * v.d;
    CScalar rhs = d_want * (jsq * jsq - CScalar(Rational(9)) * jsq + CScalar(Rational(15)));
    if (!(lhs == rhs)) throw VerificationError("cubic core: polynomial identity fails");
    return {j, v};
}

}  // namespace fgsp6
