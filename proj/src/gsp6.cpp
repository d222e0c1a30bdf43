#include "fgsp6/gsp6.hpp"

#include <algorithm>

namespace fgsp6 {

GSp6Element GSp6Element::checked(MatQ m) {
    if (m.rows() != 6 || m.cols() != 6) throw std::invalid_argument("GSp6 element must be 6x6");
    MatQ j = gsp6_j6_matrix();
    MatQ p = m * j * m.transpose();
    Rational nu = p(0, 3);
    if (nu == 0) throw std::invalid_argument("not a symplectic similitude (degenerate)");
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 6; ++k)
            if (p(i, k) != nu * j(i, k))
                throw std::invalid_argument("not a symplectic similitude");
    return GSp6Element{std::move(m), std::move(nu)};
}

MatQ gsp6_j6_matrix() {
    MatQ j(6, 6);
    for (int i = 0; i < 3; ++i) {
        j(i, 3 + i) = 1;
        j(3 + i, i) = -1;
    }
    return j;
}

GSp6Element gsp6_unipotent(const MatQ& u) {
    if (u.rows() != 3 || u.cols() != 3 || u != u.transpose())
        throw std::domain_error("unipotent block must be symmetric 3x3");
    MatQ m = MatQ::identity(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, 3 + j) = u(i, j);
    return GSp6Element::checked(std::move(m));
}

GSp6Element gsp6_levi(const Rational& lambda, const MatQ& m) {
    if (lambda == 0) throw std::domain_error("levi needs lambda != 0");
    if (m.rows() != 3 || m.cols() != 3) throw std::domain_error("levi needs a 3x3 matrix");
    auto inv = m.inverse();
    if (!inv) throw std::domain_error("levi needs an invertible matrix");
    MatQ top = inv->transpose() * (lambda * m.det());
    MatQ g(6, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            g(i, j) = top(i, j);
            g(3 + i, 3 + j) = m(i, j);
        }
    return GSp6Element::checked(std::move(g));
}

namespace wedge_detail {

const std::array<std::array<int, 3>, 20>& subsets() {
    static const std::array<std::array<int, 3>, 20> table = [] {
        std::array<std::array<int, 3>, 20> t{};
        int n = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                for (int k = j + 1; k < 6; ++k) t[n++] = {i, j, k};
        return t;
    }();
    return table;
}

int subset_index(int g1, int g2, int g3) {
    const auto& tab = subsets();
    std::array<int, 3> key{g1, g2, g3};
    for (int i = 0; i < 20; ++i)
        if (tab[i] == key) return i;
    throw std::logic_error("bad wedge subset");
}

Sorted sort_wedge(int g1, int g2, int g3) {
    int v[3] = {g1, g2, g3};
    int sign = 1;
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i + 1 < 3; ++i)
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                sign = -sign;
            }
    if (v[0] == v[1] || v[1] == v[2]) return {-1, 0};
    return {subset_index(v[0], v[1], v[2]), sign};
}

}  // namespace wedge_detail

namespace {

// generator indices: e1 e2 e3 = 0 1 2, f1 f2 f3 = 3 4 5
struct SlotRef {
    int mono;  // basis monomial index
    int sign;
};

// e_i^* ^ f_j and f_i^* ^ e_j slots for i, j in 0..2
SlotRef estar_f(int i, int j) {
    auto s = wedge_detail::sort_wedge((i + 1) % 3, (i + 2) % 3, 3 + j);
    return {s.index, s.sign};
}
SlotRef fstar_e(int i, int j) {
    auto s = wedge_detail::sort_wedge(3 + (i + 1) % 3, 3 + (i + 2) % 3, j);
    return {s.index, s.sign};
}

template <class K>
QuaternionElement<K> hermitian_entry(const JElement<K>& h, int i, int j) {
    if (i == j) return QuaternionElement<K>::scalar(h.ring, h.c[i]);
    if (i == 0 && j == 1) return h.a[2];
    if (i == 1 && j == 0) return h.a[2].conj();
    if (i == 0 && j == 2) return h.a[1].conj();
    if (i == 2 && j == 0) return h.a[1];
    if (i == 1 && j == 2) return h.a[0];
    return h.a[0].conj();  // (2,1)
}

}  // namespace

template <class K>
Wedge3<K> embed_w(const WElement<K>& v) {
    Wedge3<K> x(v.ring());
    x.coef[wedge_detail::subset_index(0, 1, 2)] += QuaternionElement<K>::scalar(v.ring(), v.a);
    x.coef[wedge_detail::subset_index(3, 4, 5)] += QuaternionElement<K>::scalar(v.ring(), v.d);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            SlotRef eb = estar_f(i, j);
            QuaternionElement<K> bij = hermitian_entry(v.b, i, j);
            if (eb.sign < 0) bij = -bij;
            x.coef[eb.mono] += bij;
            SlotRef cb = fstar_e(i, j);
            QuaternionElement<K> cij = hermitian_entry(v.c, i, j);
            if (cb.sign < 0) cij = -cij;
            x.coef[cb.mono] += cij;
        }
    return x;
}

template <class K>
WElement<K> project_w(const Wedge3<K>& x) {
    const RingPtr& ring = x.ring;
    WElement<K> v(ring);
    auto scalar_of = [](const QuaternionElement<K>& q, const char* slot) -> K {
        for (int s = 1; s < 4; ++s)
            if (!scalar_is_zero(q.x[s]))
                throw NotInImage(std::string("non-scalar coefficient in ") + slot);
        return q.x[0];
    };
    v.a = scalar_of(x.coef[wedge_detail::subset_index(0, 1, 2)], "e1^e2^e3 slot");
    v.d = scalar_of(x.coef[wedge_detail::subset_index(3, 4, 5)], "f1^f2^f3 slot");

    Mat3B<K> bm(ring), cm(ring);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            SlotRef eb = estar_f(i, j);
            QuaternionElement<K> q = x.coef[eb.mono];
            if (eb.sign < 0) q = -q;
            bm.m[i][j] = q;
            SlotRef cb = fstar_e(i, j);
            q = x.coef[cb.mono];
            if (cb.sign < 0) q = -q;
            cm.m[i][j] = q;
        }
    try {
        v.b = bm.to_jelement();
        v.c = cm.to_jelement();
    } catch (const std::domain_error&) {
        throw NotInImage("coefficient blocks are not Hermitian");
    }
    return v;
}

template Wedge3<Rational> embed_w<Rational>(const WElement<Rational>&);
template Wedge3<GaussianRational> embed_w<GaussianRational>(const WElement<GaussianRational>&);
template WElement<Rational> project_w<Rational>(const Wedge3<Rational>&);
template WElement<GaussianRational> project_w<GaussianRational>(const Wedge3<GaussianRational>&);

GroupElement iota(const GSp6Element& g, const RingPtr& ring) {
    // third wedge power, rows indexed by source monomials
    const auto& subs = wedge_detail::subsets();
    MatQ w3(20, 20);
    for (int s = 0; s < 20; ++s)
        for (int t = 0; t < 20; ++t) {
            // 3x3 minor of g on rows subs[s], columns subs[t]
            MatQ minor(3, 3);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) minor(r, c) = g.g(subs[s][r], subs[t][c]);
            w3(s, t) = minor.det();
        }
    w3 = w3 * (Rational(1) / g.nu);

    MatQ m(32, 32);
    for (int s = 0; s < 32; ++s) {
        Wedge3<Rational> x = embed_w(WQ::basis(ring, s));
        Wedge3<Rational> y(ring);
        for (int mono = 0; mono < 20; ++mono) {
            if (x.coef[mono].is_zero()) continue;
            for (int target = 0; target < 20; ++target) {
                const Rational& c = w3(mono, target);
                if (c == 0) continue;
                y.coef[target] += c * x.coef[mono];
            }
        }
        WQ img(ring);
        try {
            img = project_w(y);
        } catch (const NotInImage& e) {
            throw VerificationError(std::string("wedge action leaves the embedded W: ") + e.what());
        }
        for (int t = 0; t < 32; ++t) m(s, t) = img.coord(t);
    }
    return GroupElement::checked(std::move(m), g.nu, ring);
}

MatQ translation_log_matrix(const JElement<Rational>& x) {
    const RingPtr& ring = x.ring;
    JElement<Rational> xs = sharp(x);
    return detail::matrix_of_action(ring, [&](const WQ& w) {
        return WQ{Rational(0), w.a * x, cross(w.b, x), trace_pair(w.c, x)};
    });
}

WQ f_order(const GoodBasedOrder& o) {
    WQ v(o.ring);
    v.c = a_matrix(o);
    return v;
}

WQ f_order_action(const GoodBasedOrder& o, const MatQ& u, const Rational& lambda, const MatQ& m) {
    if (lambda == 0) throw std::domain_error("f_order_action needs lambda != 0");
    WQ v = f_order(o);
    v = iota(gsp6_unipotent(u), o.ring).apply(v);
    v = iota(gsp6_levi(lambda, m), o.ring).apply(v);

    WQ expect(o.ring);
    expect.c = transformed_a_matrix(o, m);
    MatQ tu = o.form.half_integral_matrix() * u;
    for (int i = 0; i < 3; ++i) expect.d += tu(i, i);
    expect.d /= lambda;
    if (!(v == expect))
        throw VerificationError("f_O translate disagrees with its closed form");
    return v;
}

int xi_indicator(const TernaryForm& t, const Rational& lambda, const MatQ& m) {
    if (m.det() == 0) throw std::domain_error("xi needs an invertible matrix");
    if (!is_integer(lambda)) return 0;
    return suborder_test(t, m) ? 1 : 0;
}

bool stabilizes_line(const GoodBasedOrder& o, const GSp6Element& g) {
    WQ v = f_order(o);
    WQ w = iota(g, o.ring).apply(v);
    // w == mu * v for some scalar?
    Rational mu;
    bool have = false;
    for (int t = 0; t < 32; ++t) {
        if (v.coord(t) == 0) {
            if (w.coord(t) != 0) return false;
            continue;
        }
        Rational r = w.coord(t) / v.coord(t);
        if (!have) {
            mu = r;
            have = true;
        } else if (r != mu) {
            return false;
        }
    }
    return true;
}

JElement<Rational> symmetric_to_j(const RingPtr& ring, const MatQ& u) {
    if (u.rows() != 3 || u.cols() != 3 || u != u.transpose())
        throw std::domain_error("symmetric 3x3 matrix required");
    JElement<Rational> x(ring);
    for (int i = 0; i < 3; ++i) x.c[i] = u(i, i);
    x.a[0] = QuatQ::scalar(ring, u(1, 2));
    x.a[1] = QuatQ::scalar(ring, u(2, 0));
    x.a[2] = QuatQ::scalar(ring, u(0, 1));
    return x;
}

}  // namespace fgsp6
