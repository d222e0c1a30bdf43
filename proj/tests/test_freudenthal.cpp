#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgsp6/clifford.hpp"
#include "fgsp6/group.hpp"
#include "fgsp6/random.hpp"

using namespace fgsp6;

namespace {

RingPtr hamilton() {
    static RingPtr r = ring_from_form(TernaryForm(1, 1, 1, 0, 0, 0));
    return r;
}

JElement<Rational> random_j(Rng& rng, const RingPtr& ring) {
    JElement<Rational> h(ring);
    for (int i = 0; i < 15; ++i) h.coord(i) = rng.next_rational();
    return h;
}

WQ random_w(Rng& rng, const RingPtr& ring) {
    WQ w(ring);
    for (int i = 0; i < 32; ++i) w.coord(i) = rng.next_rational();
    return w;
}

WQ rank1_from_j(const JElement<Rational>& x) {
    return apply_nbar(x, WQ::f(x.ring));  // (N(X), X^#, X, 1)
}

GroupElement random_word(Rng& rng, const RingPtr& ring, int len) {
    GroupElement g = GroupElement::identity(ring);
    for (int t = 0; t < len; ++t) {
        switch (rng.next_long(0, 4)) {
            case 0: g = g * op_n(random_j(rng, ring)); break;
            case 1: g = g * op_nbar(random_j(rng, ring)); break;
            case 2: g = g * op_j6(ring); break;
            case 3: g = g * op_weight(ring, Rational(rng.next_long(1, 3))); break;
            default: {
                Mat3B<Rational> m(ring);
                for (int i = 0; i < 3; ++i) {
                    m.m[i][i] = QuatQ::one(ring);
                    m.m[i][i].x[rng.next_long(0, 3)] += rng.next_long(0, 1);
                    for (int j = i + 1; j < 3; ++j)
                        m.m[i][j].x[rng.next_long(0, 3)] = rng.next_long(-1, 1);
                }
                try {
                    g = g * op_m(m, 1);
                } catch (const std::domain_error&) {
                    g = g * op_j6(ring);
                }
                break;
            }
        }
    }
    return g;
}

}  // namespace

TEST_CASE("symplectic form basics") {
    auto ring = hamilton();
    WQ e = WQ::e(ring), f = WQ::f(ring);
    CHECK(symplectic(e, f) == 1);
    CHECK(symplectic(f, e) == -1);
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        WQ v = random_w(rng, ring), w = random_w(rng, ring);
        CHECK(symplectic(v, v) == 0);
        CHECK(symplectic(v, w) == -symplectic(w, v));
    }
}

TEST_CASE("quartic values and polarization") {
    auto ring = hamilton();
    WQ e = WQ::e(ring), f = WQ::f(ring);
    CHECK(quartic(e) == 0);
    CHECK(quartic(f) == 0);
    WQ ef = e + f;
    CHECK(quartic(ef) == 1);

    Rng rng(32);
    for (int t = 0; t < 40; ++t) {
        WQ v = random_w(rng, ring);
        CHECK(fourlinear(v, v, v, v) == quartic(v));
    }
    for (int t = 0; t < 25; ++t) {
        WQ w0 = random_w(rng, ring), w1 = random_w(rng, ring);
        WQ w2 = random_w(rng, ring), w3 = random_w(rng, ring);
        CHECK(fourlinear12(w0, w1, w2, w3) == Rational(12) * fourlinear(w0, w1, w2, w3));
        CHECK(symplectic(theta(w0), w1) == fourlinear(w0, w0, w0, w1));
        CHECK(symplectic(theta_polar(w0, w1), w2) == fourlinear(w0, w0, w1, w2));
    }
}

TEST_CASE("rank stratification on W") {
    auto ring = hamilton();
    WQ e = WQ::e(ring), f = WQ::f(ring);
    CHECK(wrank(WQ(ring)) == 0);
    CHECK(wrank(f) == 1);
    CHECK(wrank(e) == 1);
    CHECK(wrank(e + f) == 4);

    Rng rng(33);
    for (int t = 0; t < 10; ++t) {
        WQ v = rank1_from_j(random_j(rng, ring));
        CHECK(wrank(v) == 1);
        CHECK(rank1_is_sharp_pair(v));
    }
    CHECK(rank1_is_sharp_pair(f));
    CHECK(!rank1_is_sharp_pair(e + f));

    // (0, b, 0, 0) has the rank of b
    WQ v2(ring);
    v2.b = JElement<Rational>::diagonal(ring, 1, 1, 0);
    CHECK(wrank(v2) == 2);
    WQ v1(ring);
    v1.b = JElement<Rational>::diagonal(ring, 1, 0, 0);
    CHECK(wrank(v1) == 1);
    WQ v3(ring);
    v3.b = JElement<Rational>::identity(ring);
    CHECK(wrank(v3) == 3);

    for (int t = 0; t < 25; ++t) {
        WQ v = random_w(rng, ring);
        CHECK(rank1_is_sharp_pair(v) == (wrank(v) <= 1));
    }
}

TEST_CASE("translation generators act as displayed") {
    auto ring = hamilton();
    Rng rng(34);
    for (int t = 0; t < 10; ++t) {
        auto x = random_j(rng, ring);
        GroupElement n = op_n(x);
        CHECK(n.nu() == 1);
        WQ img = n.apply(WQ::e(ring));
        CHECK(img.a == 1);
        CHECK(img.b == x);
        CHECK(img.c == sharp(x));
        CHECK(img.d == jnorm(x));

        GroupElement nb = op_nbar(x);
        WQ img2 = nb.apply(WQ::f(ring));
        CHECK(img2 == rank1_from_j(x));
    }
}

TEST_CASE("n is a homomorphism and products stay verified") {
    auto ring = hamilton();
    Rng rng(35);
    for (int t = 0; t < 10; ++t) {
        auto x = random_j(rng, ring), y = random_j(rng, ring);
        GroupElement lhs = op_n(x) * op_n(y);
        GroupElement rhs = op_n(x + y);
        CHECK(lhs.matrix() == rhs.matrix());
        GroupElement lb = op_nbar(x) * op_nbar(y);
        CHECK(lb.matrix() == op_nbar(x + y).matrix());
    }
}

TEST_CASE("scalings, J6 and inverses") {
    auto ring = hamilton();
    GroupElement j = op_j6(ring);
    CHECK(j.nu() == 1);
    WQ e = WQ::e(ring);
    CHECK(j.apply(e) == WQ::f(ring));
    GroupElement s = op_scalar(ring, Rational(3, 2));
    CHECK(s.nu() == Rational(9, 4));
    GroupElement w = op_weight(ring, Rational(2));
    CHECK(w.nu() == 2);
    Rng rng(36);
    GroupElement g = random_word(rng, ring, 3);
    GroupElement gi = g.inverse();
    CHECK((g * gi).matrix() == MatQ::identity(32));
    CHECK(gi.nu() * g.nu() == 1);
}

TEST_CASE("membership verification rejects near misses") {
    auto ring = hamilton();
    auto x = JElement<Rational>::identity(ring);
    MatQ m = op_n(x).matrix();
    m(0, 31) += 1;
    auto fail = group_membership_failure(m, 1, ring);
    REQUIRE(fail.has_value());

    // symplectic similitude that is not a quartic similitude:
    // scale the b.c1 coordinate by 2 and the dual c.c1 coordinate by 1/2
    MatQ d = MatQ::identity(32);
    d(1, 1) = 2;
    d(16, 16) = Rational(1, 2);
    auto fail2 = group_membership_failure(d, 1, ring);
    REQUIRE(fail2.has_value());
    CHECK(fail2->find("quartic") != std::string::npos);
    CHECK_THROWS_AS(GroupElement::checked(d, 1, ring), VerificationError);
}

TEST_CASE("rank is invariant under verified group words") {
    auto ring = hamilton();
    Rng rng(37);
    for (int t = 0; t < 12; ++t) {
        GroupElement g = random_word(rng, ring, 2);
        WQ v = (t % 3 == 0) ? rank1_from_j(random_j(rng, ring)) : random_w(rng, ring);
        CHECK(wrank(g.apply(v)) == wrank(v));
    }
}

TEST_CASE("norm square against the J pairing") {
    auto ring = hamilton();
    Rng rng(38);
    GroupElement j = op_j6(ring);
    for (int t = 0; t < 25; ++t) {
        WQ v = random_w(rng, ring);
        Rational n = symplectic(v, j.apply(v));
        CHECK(n == v.a * v.a + trace_pair(v.b, v.b) + trace_pair(v.c, v.c) + v.d * v.d);
        CHECK(n >= 0);
        if (n == 0) CHECK(v.is_zero());
    }
}

TEST_CASE("op_m examples") {
    auto ring = hamilton();
    GroupElement id = op_m(Mat3B<Rational>::scalar(ring, 1), 1);
    CHECK(id.matrix() == MatQ::identity(32));

    Mat3B<Rational> m = Mat3B<Rational>::scalar(ring, 1);
    m.m[2][2] = QuatQ::basis(ring, 1);  // diag(1, 1, v1)
    GroupElement g = op_m(m, 1);
    CHECK(g.nu() == 1);

    GroupElement h = op_m(Mat3B<Rational>::scalar(ring, 2), 1);
    // lambda = N(4 * 1_3) = 64, t(b) = 4b
    CHECK(h.matrix()(0, 0) == 64);
    CHECK(h.matrix()(1, 1) == 4);
    CHECK(h.matrix()(31, 31) == Rational(1, 64));

    CHECK_THROWS_AS(op_m(Mat3B<Rational>(ring), 1), std::domain_error);
}

TEST_CASE("normalize_d1 moves rank-one elements to d = 1") {
    auto ring = hamilton();
    WQ f = WQ::f(ring);
    auto [gf, vf] = normalize_d1(f);
    CHECK(vf == f);
    CHECK(vf == gf.apply(f));

    auto [ge, ve] = normalize_d1(WQ::e(ring));
    CHECK(ve.d == 1);
    CHECK(ve == ge.apply(WQ::e(ring)));

    auto hur = order_from_form(TernaryForm(1, 1, 1, 1, 1, 1));
    WQ fo(hur.ring);
    fo.c = a_matrix(hur);
    CHECK(wrank(fo) == 1);
    auto [go, vo] = normalize_d1(fo);
    CHECK(vo.d == 1);
    CHECK(vo == go.apply(fo));
    CHECK(wrank(vo) == 1);

    CHECK_THROWS_AS(normalize_d1(WQ::e(ring) + f), std::domain_error);
}
