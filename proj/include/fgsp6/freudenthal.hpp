#ifndef FGSP6_FREUDENTHAL_HPP
#define FGSP6_FREUDENTHAL_HPP

#include <array>
#include <sstream>
#include <string>

#include "fgsp6/jordan.hpp"
#include "fgsp6/linalg.hpp"

namespace fgsp6 {

// Freudenthal's space W = F + H3(B) + H3(B) + F, elements (a, b, c, d).
// Coordinate order 0 = a, 1..15 = b, 16..30 = c, 31 = d.
template <class K>
struct WElement {
    K a{0};
    JElement<K> b, c;
    K d{0};

    WElement() = default;
    explicit WElement(RingPtr r) : b(r), c(r) {}
    WElement(K a_, JElement<K> b_, JElement<K> c_, K d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        require_same_ring(b.ring, c.ring);
    }

    RingPtr ring() const { return b.ring; }

    static WElement e(RingPtr r) {
        WElement w(std::move(r));
        w.a = K(1);
        return w;
    }
    static WElement f(RingPtr r) {
        WElement w(std::move(r));
        w.d = K(1);
        return w;
    }
    static WElement basis(RingPtr r, int idx) {
        WElement w(std::move(r));
        w.coord(idx) = K(1);
        return w;
    }

    K& coord(int idx) {
        if (idx == 0) return a;
        if (idx <= 15) return b.coord(idx - 1);
        if (idx <= 30) return c.coord(idx - 16);
        return d;
    }
    const K& coord(int idx) const {
        if (idx == 0) return a;
        if (idx <= 15) return b.coord(idx - 1);
        if (idx <= 30) return c.coord(idx - 16);
        return d;
    }

    bool is_zero() const {
        return scalar_is_zero(a) && scalar_is_zero(d) && b.is_zero() && c.is_zero();
    }

    WElement operator-() const { return {-a, -b, -c, -d}; }
    WElement& operator+=(const WElement& o) {
        a += o.a;
        b += o.b;
        c += o.c;
        d += o.d;
        return *this;
    }
    WElement& operator-=(const WElement& o) {
        a -= o.a;
        b -= o.b;
        c -= o.c;
        d -= o.d;
        return *this;
    }
    friend WElement operator+(WElement x, const WElement& y) { return x += y; }
    friend WElement operator-(WElement x, const WElement& y) { return x -= y; }
    friend WElement operator*(const K& s, const WElement& w) {
        return {s * w.a, s * w.b, s * w.c, s * w.d};
    }
    friend bool operator==(const WElement& x, const WElement& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const WElement& x, const WElement& y) { return !(x == y); }

    WElement sigma_conj() const { return {fgsp6::sigma(a), b.sigma_conj(), c.sigma_conj(), fgsp6::sigma(d)}; }

    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < 32; ++i) os << (i ? " " : "") << scalar_to_string(coord(i));
        return os.str();
    }

    static WElement from_string(RingPtr ring, const std::string& s, K (*parse)(const std::string&)) {
        std::istringstream is(s);
        WElement w(ring);
        std::string tok;
        for (int i = 0; i < 32; ++i) {
            if (!(is >> tok)) throw std::invalid_argument("W element needs 32 scalars");
            w.coord(i) = parse(tok);
        }
        return w;
    }
};

using WQ = WElement<Rational>;
using WC = WElement<GaussianRational>;

// <(a,b,c,d), (a',b',c',d')> = ad' - tr(b,c') + tr(c,b') - da'
template <class K>
K symplectic(const WElement<K>& u, const WElement<K>& v) {
    return u.a * v.d - trace_pair(u.b, v.c) + trace_pair(u.c, v.b) - u.d * v.a;
}

// Q(v) = (ad - tr(b,c))^2 + 4aN(c) + 4dN(b) - 4tr(b^#, c^#)
template <class K>
K quartic(const WElement<K>& v) {
    K q = v.a * v.d - trace_pair(v.b, v.c);
    return q * q + K(4) * v.a * jnorm(v.c) + K(4) * v.d * jnorm(v.b) -
           K(4) * trace_pair(sharp(v.b), sharp(v.c));
}

// Symmetric polarization with (v,v,v,v) = Q(v), by inclusion-exclusion over
// subset sums divided by 24.
template <class K>
K fourlinear(const WElement<K>& w, const WElement<K>& x, const WElement<K>& y, const WElement<K>& z) {
    const WElement<K>* v[4] = {&w, &x, &y, &z};
    K acc(0);
    for (int mask = 1; mask < 16; ++mask) {
        WElement<K> s(w.ring());
        int bits = 0;
        for (int t = 0; t < 4; ++t)
            if (mask & (1 << t)) {
                s += *v[t];
                ++bits;
            }
        K q = quartic(s);
        if ((4 - bits) % 2)
            acc -= q;
        else
            acc += q;
    }
    return acc / K(24);
}

// Closed form of 12 * fourlinear, used by the rank machinery and the group
// verification path; agreement with the polarization above is a unit test.
template <class K>
K fourlinear12(const WElement<K>& v1, const WElement<K>& v2, const WElement<K>& v3,
               const WElement<K>& v4) {
    const WElement<K>* v[4] = {&v1, &v2, &v3, &v4};
    auto q2 = [&](int i, int j) -> K {
        return v[i]->a * v[j]->d + v[j]->a * v[i]->d - trace_pair(v[i]->b, v[j]->c) -
               trace_pair(v[j]->b, v[i]->c);
    };
    auto tri = [&](const JElement<K>& x, const JElement<K>& y, const JElement<K>& z) -> K {
        return trace_pair(cross(x, y), z);
    };
    K acc = q2(0, 1) * q2(2, 3) + q2(0, 2) * q2(1, 3) + q2(0, 3) * q2(1, 2);
    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4, k = (i + 2) % 4, l = (i + 3) % 4;
        acc += K(2) * v[i]->a * tri(v[j]->c, v[k]->c, v[l]->c);
        acc += K(2) * v[i]->d * tri(v[j]->b, v[k]->b, v[l]->b);
    }
    auto t4 = [&](int i, int j, int k, int l) -> K {
        return trace_pair(cross(v[i]->b, v[j]->b), cross(v[k]->c, v[l]->c));
    };
    acc -= K(2) * (t4(0, 1, 2, 3) + t4(2, 3, 0, 1) + t4(0, 2, 1, 3) + t4(1, 3, 0, 2) +
                   t4(0, 3, 1, 2) + t4(1, 2, 0, 3));
    return acc;
}

// theta(v), the cubic map with <theta(v), x> = fourlinear(v, v, v, x).
template <class K>
WElement<K> theta(const WElement<K>& v) {
    K q = v.a * v.d - trace_pair(v.b, v.c);
    JElement<K> bs = sharp(v.b), cs = sharp(v.c);
    K half(Rational(1, 2));
    K a0 = half * (q * v.a + K(2) * jnorm(v.b));
    JElement<K> b0 = half * (q * v.b - K(2) * (v.a * cs) + K(2) * cross(v.c, bs));
    JElement<K> c0 = half * (K(-1) * (q * v.c) + K(2) * (v.d * bs) - K(2) * cross(v.b, cs));
    K d0 = half * (K(-1) * q * v.d - K(2) * jnorm(v.c));
    return {a0, b0, c0, d0};
}

// T(v, v, w), the trilinear cousin: <T(v,v,w), x> = fourlinear(v, v, w, x).
template <class K>
WElement<K> theta_polar(const WElement<K>& v, const WElement<K>& w) {
    K qv = v.a * v.d - trace_pair(v.b, v.c);
    K q2vw = v.a * w.d + w.a * v.d - trace_pair(v.b, w.c) - trace_pair(w.b, v.c);
    JElement<K> bs = sharp(v.b), cs = sharp(v.c);
    JElement<K> bxbw = cross(v.b, w.b), cxcw = cross(v.c, w.c);
    K sixth(Rational(1, 6)), third(Rational(1, 3));
    K A = sixth * (qv * w.d + q2vw * v.d + trace_pair(cxcw, v.c));
    K D = sixth * (qv * w.a + q2vw * v.a + trace_pair(bxbw, v.b));
    JElement<K> B =
        sixth * (K(-1) * (qv * w.c) - q2vw * v.c + K(2) * (v.d * bxbw) + K(2) * (w.d * bs)) -
        third * (cross(w.b, cs) + cross(v.b, cxcw));
    JElement<K> C =
        sixth * (K(-1) * (qv * w.b) - q2vw * v.b + K(2) * (v.a * cxcw) + K(2) * (w.a * cs)) -
        third * (cross(bs, w.c) + cross(bxbw, v.c));
    return {D, K(-1) * C, B, K(-1) * A};
}

// Basis of {x : <v, x> = 0}, dimension 31 for v != 0.
template <class K>
std::vector<WElement<K>> symplectic_perp_basis(const WElement<K>& v) {
    Mat<K> row(1, 32);
    for (int t = 0; t < 32; ++t) row(0, t) = symplectic(v, WElement<K>::basis(v.ring(), t));
    auto kb = row.kernel_basis();
    std::vector<WElement<K>> out;
    out.reserve(kb.size());
    for (auto& x : kb) {
        WElement<K> w(v.ring());
        for (int t = 0; t < 32; ++t) w.coord(t) = x[t];
        out.push_back(std::move(w));
    }
    return out;
}

// Rank stratification: <=3 iff Q = 0; <=2 iff the triple polarization
// vanishes against all of W; <=1 iff (v,v,w,w') = 0 for all w in W and w'
// perpendicular to v; 0 iff v = 0.
template <class K>
int wrank(const WElement<K>& v) {
    if (v.is_zero()) return 0;
    if (!scalar_is_zero(quartic(v))) return 4;
    if (!theta(v).is_zero()) return 3;
    auto perp = symplectic_perp_basis(v);
    for (int t = 0; t < 32; ++t) {
        WElement<K> x = theta_polar(v, WElement<K>::basis(v.ring(), t));
        if (x.is_zero()) continue;
        for (const auto& p : perp)
            if (!scalar_is_zero(symplectic(x, p))) return 2;
    }
    return 1;
}

// rank <= 1 via the sharp-pair characterization:
// b^# = a c, c^# = d b, bc = cb in M3(B), and bc = (ad) 1_3.
template <class K>
bool rank1_is_sharp_pair(const WElement<K>& v) {
    if (sharp(v.b) != v.a * v.c) return false;
    if (sharp(v.c) != v.d * v.b) return false;
    auto bm = Mat3B<K>::from_jelement(v.b);
    auto cm = Mat3B<K>::from_jelement(v.c);
    auto bc = bm * cm;
    if (!(bc == cm * bm)) return false;
    return bc == Mat3B<K>::scalar(v.ring(), v.a * v.d);
}

// Trace Gram of H3(B) on the 15 coordinates.
inline MatQ jordan_gram(const RingPtr& ring) {
    MatQ g(15, 15);
    for (int i = 0; i < 3; ++i) g(i, i) = 1;
    for (int s = 0; s < 3; ++s)
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q) g(3 + 4 * s + p, 3 + 4 * s + q) = ring->gram(p, q);
    return g;
}

// Gram of the symplectic form on the 32 coordinates.
inline MatQ symplectic_gram(const RingPtr& ring) {
    MatQ s(32, 32);
    s(0, 31) = 1;
    s(31, 0) = -1;
    MatQ g = jordan_gram(ring);
    for (int i = 0; i < 15; ++i)
        for (int j = 0; j < 15; ++j) {
            s(1 + i, 16 + j) = -g(i, j);
            s(16 + i, 1 + j) = g(i, j);
        }
    return s;
}

}  // namespace fgsp6

#endif
