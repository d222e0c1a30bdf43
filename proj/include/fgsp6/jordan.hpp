#ifndef FGSP6_JORDAN_HPP
#define FGSP6_JORDAN_HPP

#include <array>
#include <sstream>
#include <string>

#include "fgsp6/quat.hpp"

namespace fgsp6 {

// Element of the cubic Jordan algebra H3(B):
//     [ c1   a3   a2^* ]
//     [ a3^* c2   a1   ]
//     [ a2   a1^* c3   ]
// Only the 15 free coordinates are stored; the matrix is Hermitian by
// construction.  Coordinate order for serialization and for W indices:
// (c1, c2, c3, a1 coords, a2 coords, a3 coords).
template <class K>
struct JElement {
    RingPtr ring;
    std::array<K, 3> c{K(0), K(0), K(0)};
    std::array<QuaternionElement<K>, 3> a;

    JElement() = default;
    explicit JElement(RingPtr r) : ring(r) {
        for (auto& q : a) q = QuaternionElement<K>(r);
    }

    static JElement identity(RingPtr r) {
        JElement h(std::move(r));
        h.c = {K(1), K(1), K(1)};
        return h;
    }
    static JElement diagonal(RingPtr r, const K& c1, const K& c2, const K& c3) {
        JElement h(std::move(r));
        h.c = {c1, c2, c3};
        return h;
    }
    static K scalar_coord(const JElement& h, int idx) { return h.coord(idx); }

    // coordinates 0..14
    K& coord(int idx) {
        if (idx < 3) return c[idx];
        return a[(idx - 3) / 4].x[(idx - 3) % 4];
    }
    const K& coord(int idx) const {
        if (idx < 3) return c[idx];
        return a[(idx - 3) / 4].x[(idx - 3) % 4];
    }
    static JElement basis(RingPtr r, int idx) {
        JElement h(std::move(r));
        h.coord(idx) = K(1);
        return h;
    }

    bool is_zero() const {
        for (int i = 0; i < 15; ++i)
            if (!scalar_is_zero(coord(i))) return false;
        return true;
    }

    JElement operator-() const {
        JElement r(ring);
        for (int i = 0; i < 15; ++i) r.coord(i) = -coord(i);
        return r;
    }
    JElement& operator+=(const JElement& o) {
        require_same_ring(ring, o.ring);
        for (int i = 0; i < 15; ++i) coord(i) += o.coord(i);
        return *this;
    }
    JElement& operator-=(const JElement& o) {
        require_same_ring(ring, o.ring);
        for (int i = 0; i < 15; ++i) coord(i) -= o.coord(i);
        return *this;
    }
    friend JElement operator+(JElement x, const JElement& y) { return x += y; }
    friend JElement operator-(JElement x, const JElement& y) { return x -= y; }
    friend JElement operator*(const K& s, const JElement& h) {
        JElement r(h.ring);
        for (int i = 0; i < 15; ++i) r.coord(i) = s * h.coord(i);
        return r;
    }
    friend bool operator==(const JElement& x, const JElement& y) {
        require_same_ring(x.ring, y.ring);
        for (int i = 0; i < 15; ++i)
            if (x.coord(i) != y.coord(i)) return false;
        return true;
    }
    friend bool operator!=(const JElement& x, const JElement& y) { return !(x == y); }

    K trace() const { return c[0] + c[1] + c[2]; }

    JElement sigma_conj() const {
        JElement r(ring);
        for (int i = 0; i < 15; ++i) r.coord(i) = fgsp6::sigma(coord(i));
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < 15; ++i) os << (i ? " " : "") << scalar_to_string(coord(i));
        return os.str();
    }
};

template <class K>
K jnorm(const JElement<K>& h) {
    K n = h.c[0] * h.c[1] * h.c[2];
    n -= h.c[0] * h.a[0].norm();
    n -= h.c[1] * h.a[1].norm();
    n -= h.c[2] * h.a[2].norm();
    n += (h.a[0] * h.a[1] * h.a[2]).trace();
    return n;
}

template <class K>
JElement<K> sharp(const JElement<K>& h) {
    JElement<K> r(h.ring);
    r.c[0] = h.c[1] * h.c[2] - h.a[0].norm();
    r.c[1] = h.c[0] * h.c[2] - h.a[1].norm();
    r.c[2] = h.c[0] * h.c[1] - h.a[2].norm();
    r.a[0] = h.a[2].conj() * h.a[1].conj() - h.c[0] * h.a[0];
    r.a[1] = h.a[0].conj() * h.a[2].conj() - h.c[1] * h.a[1];
    r.a[2] = h.a[1].conj() * h.a[0].conj() - h.c[2] * h.a[2];
    return r;
}

// x × y = (x+y)^# - x^# - y^#, expanded bilinearly.
template <class K>
JElement<K> cross(const JElement<K>& x, const JElement<K>& y) {
    require_same_ring(x.ring, y.ring);
    JElement<K> r(x.ring);
    for (int t = 0; t < 3; ++t) {
        int u = (t + 1) % 3, v = (t + 2) % 3;
        r.c[t] = x.c[u] * y.c[v] + y.c[u] * x.c[v] - pair(x.a[t], y.a[t]);
    }
    r.a[0] = x.a[2].conj() * y.a[1].conj() + y.a[2].conj() * x.a[1].conj() - x.c[0] * y.a[0] - y.c[0] * x.a[0];
    r.a[1] = x.a[0].conj() * y.a[2].conj() + y.a[0].conj() * x.a[2].conj() - x.c[1] * y.a[1] - y.c[1] * x.a[1];
    r.a[2] = x.a[1].conj() * y.a[0].conj() + y.a[1].conj() * x.a[0].conj() - x.c[2] * y.a[2] - y.c[2] * x.a[2];
    return r;
}

// tr(x, y) = sum x_ii y_ii + sum_{i<j} (x_ij, y_ij)
template <class K>
K trace_pair(const JElement<K>& x, const JElement<K>& y) {
    require_same_ring(x.ring, y.ring);
    K t = x.c[0] * y.c[0] + x.c[1] * y.c[1] + x.c[2] * y.c[2];
    for (int s = 0; s < 3; ++s) t += pair(x.a[s], y.a[s]);
    return t;
}

// the symmetric trilinear form with (x,x,x) = 6N(x)
template <class K>
K trilinear(const JElement<K>& x, const JElement<K>& y, const JElement<K>& z) {
    return jnorm(x + y + z) - jnorm(x + y) - jnorm(x + z) - jnorm(y + z) + jnorm(x) + jnorm(y) + jnorm(z);
}

template <class K>
int jrank(const JElement<K>& h) {
    if (!scalar_is_zero(jnorm(h))) return 3;
    if (!sharp(h).is_zero()) return 2;
    if (!h.is_zero()) return 1;
    return 0;
}

// Full 3x3 quaternion matrix, used transiently for M3(B) identities.
template <class K>
struct Mat3B {
    RingPtr ring;
    std::array<std::array<QuaternionElement<K>, 3>, 3> m;

    explicit Mat3B(RingPtr r) : ring(r) {
        for (auto& row : m)
            for (auto& q : row) q = QuaternionElement<K>(r);
    }

    static Mat3B from_jelement(const JElement<K>& h) {
        Mat3B x(h.ring);
        auto sc = [&](const K& v) { return QuaternionElement<K>::scalar(h.ring, v); };
        x.m[0][0] = sc(h.c[0]);
        x.m[1][1] = sc(h.c[1]);
        x.m[2][2] = sc(h.c[2]);
        x.m[0][1] = h.a[2];
        x.m[1][0] = h.a[2].conj();
        x.m[0][2] = h.a[1].conj();
        x.m[2][0] = h.a[1];
        x.m[1][2] = h.a[0];
        x.m[2][1] = h.a[0].conj();
        return x;
    }

    static Mat3B scalar(RingPtr r, const K& v) {
        Mat3B x(r);
        for (int i = 0; i < 3; ++i) x.m[i][i] = QuaternionElement<K>::scalar(r, v);
        return x;
    }

    Mat3B conj_transpose() const {
        Mat3B r(ring);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i].conj();
        return r;
    }

    bool is_hermitian() const {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (m[i][j] != m[j][i].conj()) return false;
        return true;
    }

    // requires hermitian with scalar diagonal
    JElement<K> to_jelement() const {
        JElement<K> h(ring);
        for (int i = 0; i < 3; ++i) {
            for (int s = 1; s < 4; ++s)
                if (!scalar_is_zero(m[i][i].x[s])) throw std::domain_error("non-scalar diagonal");
            h.c[i] = m[i][i].x[0];
        }
        h.a[0] = m[1][2];
        h.a[1] = m[2][0];
        h.a[2] = m[0][1];
        if (!is_hermitian()) throw std::domain_error("matrix is not Hermitian");
        return h;
    }

    friend Mat3B operator*(const Mat3B& x, const Mat3B& y) {
        require_same_ring(x.ring, y.ring);
        Mat3B r(x.ring);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) r.m[i][j] += x.m[i][k] * y.m[k][j];
        return r;
    }
    friend Mat3B operator-(Mat3B x, const Mat3B& y) {
        require_same_ring(x.ring, y.ring);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) x.m[i][j] -= y.m[i][j];
        return x;
    }
    friend bool operator==(const Mat3B& x, const Mat3B& y) {
        require_same_ring(x.ring, y.ring);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (x.m[i][j] != y.m[i][j]) return false;
        return true;
    }
    bool is_zero() const {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (!m[i][j].is_zero()) return false;
        return true;
    }
};

template <class K>
JElement<K> jelement_from_string(RingPtr ring, const std::string& s,
                                 K (*parse)(const std::string&)) {
    std::istringstream is(s);
    JElement<K> h(ring);
    std::string tok;
    for (int i = 0; i < 15; ++i) {
        if (!(is >> tok)) throw std::invalid_argument("H3 element needs 15 scalars");
        h.coord(i) = parse(tok);
    }
    return h;
}

}  // namespace fgsp6

#endif
