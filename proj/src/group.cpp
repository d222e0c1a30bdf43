#include "fgsp6/group.hpp"

namespace fgsp6 {
namespace {

// E11, E22, E33, then the off-diagonal symmetric units (a_s = 1).
std::array<JElement<Rational>, 6> symmetric_rational_basis(const RingPtr& ring) {
    std::array<JElement<Rational>, 6> out{JElement<Rational>(ring), JElement<Rational>(ring),
                                          JElement<Rational>(ring), JElement<Rational>(ring),
                                          JElement<Rational>(ring), JElement<Rational>(ring)};
    for (int i = 0; i < 3; ++i) out[i].c[i] = 1;
    for (int s = 0; s < 3; ++s) out[3 + s].a[s] = QuatQ::one(ring);
    return out;
}

}  // namespace

GroupElement op_m(const Mat3B<Rational>& m, const Rational& r) {
    if (r == 0) throw std::domain_error("op_m needs r != 0");
    const RingPtr& ring = m.ring;
    Mat3B<Rational> mstar = m.conj_transpose();
    JElement<Rational> gram = (mstar * m).to_jelement();
    Rational lambda = jnorm(gram) / (r * r * r);
    if (lambda == 0) throw std::domain_error("op_m: map is singular (norm of m^* m vanishes)");

    MatQ t15(15, 15);
    for (int i = 0; i < 15; ++i) {
        auto img =
            (mstar * Mat3B<Rational>::from_jelement(JElement<Rational>::basis(ring, i)) * m)
                .to_jelement();
        for (int t = 0; t < 15; ++t) t15(i, t) = img.coord(t) / r;
    }
    auto t15inv = t15.inverse();
    if (!t15inv) throw std::logic_error("op_m: t is singular despite nonzero norm scale");
    MatQ g = jordan_gram(ring);
    MatQ ttilde = g * t15inv->transpose() * *g.inverse();

    MatQ w(32, 32);
    w(0, 0) = lambda;
    w(31, 31) = Rational(1) / lambda;
    for (int i = 0; i < 15; ++i)
        for (int t = 0; t < 15; ++t) {
            w(1 + i, 1 + t) = t15(i, t);
            w(16 + i, 16 + t) = ttilde(i, t);
        }
    return GroupElement::checked(std::move(w), 1, ring);
}

std::pair<GroupElement, WQ> normalize_d1(const WQ& v) {
    if (wrank(v) != 1) throw std::domain_error("normalize_d1 requires a rank-one element");
    RingPtr ring = v.ring();
    GroupElement g = GroupElement::identity(ring);
    WQ cur = v;

    auto push = [&](const GroupElement& step) {
        cur = step.apply(cur);
        g = g * step;
    };

    if (cur.d == 0 && cur.a != 0) push(op_j6(ring));
    if (cur.d == 0) {
        if (cur.c.is_zero()) push(op_j6(ring));  // moves b into the c slot
        auto basis = symmetric_rational_basis(ring);
        bool found = false;
        for (long lam = 1; lam <= 3 && !found; ++lam)
            for (int sign = 0; sign < 2 && !found; ++sign)
                for (const auto& x : basis) {
                    JElement<Rational> cand = Rational(sign ? -lam : lam) * x;
                    if (apply_n(cand, cur).d != 0) {
                        push(op_n(cand));
                        found = true;
                        break;
                    }
                }
        if (!found) {
            // pairs of basis elements with small coefficients
            for (long l1 = -3; l1 <= 3 && !found; ++l1)
                for (long l2 = -3; l2 <= 3 && !found; ++l2) {
                    if (l1 == 0 && l2 == 0) continue;
                    for (int s1 = 0; s1 < 6 && !found; ++s1)
                        for (int s2 = s1 + 1; s2 < 6 && !found; ++s2) {
                            JElement<Rational> cand =
                                Rational(l1) * basis[s1] + Rational(l2) * basis[s2];
                            if (apply_n(cand, cur).d != 0) {
                                push(op_n(cand));
                                found = true;
                            }
                        }
                }
        }
        if (!found)
            throw VerificationError(
                "normalize_d1: translate search exhausted at coefficient bound 3");
    }
    if (cur.d != 1) push(op_scalar(ring, Rational(1) / cur.d));
    return {g, cur};
}

}  // namespace fgsp6
