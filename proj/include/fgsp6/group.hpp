#ifndef FGSP6_GROUP_HPP
#define FGSP6_GROUP_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "fgsp6/freudenthal.hpp"

namespace fgsp6 {

// A claimed group element failed the membership proof.  Construction paths
// only produce maps that are in the group by theorem, so this signals an
// implementation bug, not bad user input.
struct VerificationError : std::logic_error {
    explicit VerificationError(const std::string& what) : std::logic_error(what) {}
};

// Exact membership check: M scales the symplectic Gram by nu (full matrix
// identity) and the polarized quartic by nu^2 on every 4-multiset of basis
// vectors.  Returns a description of the first failing check in multiset
// order, or nullopt if M is in the group.
std::optional<std::string> group_membership_failure(const MatQ& m, const Rational& nu,
                                                    const RingPtr& ring);

// Invertible linear operator on W acting on the right of row vectors,
// together with its similitude.  Verified at construction.
class GroupElement {
public:
    static GroupElement checked(MatQ m, Rational nu, RingPtr ring) {
        if (auto fail = group_membership_failure(m, nu, ring))
            throw VerificationError(*fail);
        return GroupElement(std::move(m), std::move(nu), std::move(ring));
    }

    static GroupElement identity(RingPtr ring) {
        return GroupElement(MatQ::identity(32), Rational(1), std::move(ring));
    }

    const MatQ& matrix() const { return mat_; }
    const Rational& nu() const { return nu_; }
    const RingPtr& ring() const { return ring_; }

    template <class K>
    WElement<K> apply(const WElement<K>& w) const {
        require_same_ring(w.b.ring, ring_);
        WElement<K> r(ring_);
        for (int s = 0; s < 32; ++s) {
            const K& ws = w.coord(s);
            if (scalar_is_zero(ws)) continue;
            for (int t = 0; t < 32; ++t) {
                const Rational& m = mat_(s, t);
                if (m == 0) continue;
                r.coord(t) += ws * K(m);
            }
        }
        return r;
    }

    friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
        require_same_ring(g.ring_, h.ring_);
        return checked(g.mat_ * h.mat_, g.nu_ * h.nu_, g.ring_);
    }

    GroupElement inverse() const {
        auto inv = mat_.inverse();
        if (!inv) throw std::logic_error("group element matrix not invertible");
        return checked(*inv, Rational(1) / nu_, ring_);
    }

private:
    GroupElement(MatQ m, Rational nu, RingPtr ring)
        : mat_(std::move(m)), nu_(std::move(nu)), ring_(std::move(ring)) {}

    MatQ mat_;
    Rational nu_;
    RingPtr ring_;
};

// The translation maps of W, applied directly by formula.  These work over
// any scalar (the complexified ones are needed with K = GaussianRational).
// (a,b,c,d) n(X) = (a, b+aX, c + b x X + a X^#, d + tr(c,X) + tr(b,X^#) + a N(X))
template <class K>
WElement<K> apply_n(const JElement<K>& x, const WElement<K>& w) {
    JElement<K> xs = sharp(x);
    return {w.a, w.b + w.a * x, w.c + cross(w.b, x) + w.a * xs,
            w.d + trace_pair(w.c, x) + trace_pair(w.b, xs) + w.a * jnorm(x)};
}

// (a,b,c,d) nbar(Y) = (a + tr(b,Y) + tr(c,Y^#) + d N(Y), b + c x Y + d Y^#, c + dY, d)
template <class K>
WElement<K> apply_nbar(const JElement<K>& y, const WElement<K>& w) {
    JElement<K> ys = sharp(y);
    return {w.a + trace_pair(w.b, y) + trace_pair(w.c, ys) + w.d * jnorm(y),
            w.b + cross(w.c, y) + w.d * ys, w.c + w.d * y, w.d};
}

template <class K>
WElement<K> apply_j6(const WElement<K>& w) {
    return {-w.d, w.c, K(-1) * w.b, w.a};
}

namespace detail {
template <class Fn>
MatQ matrix_of_action(const RingPtr& ring, Fn&& fn) {
    MatQ m(32, 32);
    for (int s = 0; s < 32; ++s) {
        WQ img = fn(WQ::basis(ring, s));
        for (int t = 0; t < 32; ++t) m(s, t) = img.coord(t);
    }
    return m;
}
}  // namespace detail

inline GroupElement op_n(const JElement<Rational>& x) {
    return GroupElement::checked(
        detail::matrix_of_action(x.ring, [&](const WQ& w) { return apply_n(x, w); }), 1, x.ring);
}

inline GroupElement op_nbar(const JElement<Rational>& y) {
    return GroupElement::checked(
        detail::matrix_of_action(y.ring, [&](const WQ& w) { return apply_nbar(y, w); }), 1, y.ring);
}

// (a,b,c,d) -> (-d, c, -b, a)
inline GroupElement op_j6(const RingPtr& ring) {
    return GroupElement::checked(
        detail::matrix_of_action(ring, [](const WQ& w) { return apply_j6(w); }), 1, ring);
}

// v -> lambda v, similitude lambda^2
inline GroupElement op_scalar(const RingPtr& ring, const Rational& lambda) {
    if (lambda == 0) throw std::domain_error("zero scaling");
    return GroupElement::checked(
        detail::matrix_of_action(ring, [&](const WQ& w) { return lambda * w; }), lambda * lambda,
        ring);
}

// (a,b,c,d) -> (lambda^2 a, lambda b, c, lambda^{-1} d), similitude lambda
inline GroupElement op_weight(const RingPtr& ring, const Rational& lambda) {
    if (lambda == 0) throw std::domain_error("zero scaling");
    return GroupElement::checked(
        detail::matrix_of_action(ring,
                                 [&](const WQ& w) {
                                     return WQ{lambda * lambda * w.a, lambda * w.b, w.c,
                                               w.d / lambda};
                                 }),
        lambda, ring);
}

// m(t) for t(b) = r^{-1} m^* b m with m in GL3(B):
// (a,b,c,d) -> (lambda a, t(b), ttilde(c), lambda^{-1} d), where ttilde is
// the trace-form adjoint inverse of t and lambda = r^{-3} N(m^* m).
GroupElement op_m(const Mat3B<Rational>& m, const Rational& r);

// Constructive move of a rank-one element to one with d = 1, through maps in
// the image of GSp6(Q): rescale when d != 0, route through J6 when a != 0,
// otherwise search small symmetric rational X making the n(X)-translate have
// nonzero d.  Returns the transformation and the translate.
std::pair<GroupElement, WQ> normalize_d1(const WQ& v);

}  // namespace fgsp6

#endif
