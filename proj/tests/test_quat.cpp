#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgsp6/quat.hpp"
#include "fgsp6/random.hpp"

using namespace fgsp6;

namespace {

TernaryForm random_form(Rng& rng, long lo = -5, long hi = 5) {
    return TernaryForm(rng.next_long(lo, hi), rng.next_long(lo, hi), rng.next_long(lo, hi),
                       rng.next_long(lo, hi), rng.next_long(lo, hi), rng.next_long(lo, hi));
}

QuatQ random_elt(Rng& rng, const RingPtr& ring) {
    QuatQ x(ring);
    for (int s = 0; s < 4; ++s) x.x[s] = rng.next_rational();
    return x;
}

// the multiplication table forced by the good-basis laws, built without the
// Clifford reduction
Rational law_table(const TernaryForm& t, int i, int j, int k) {
    const Rational a(t.a), b(t.b), c(t.c), d(t.d), e(t.e), f(t.f);
    auto entry = [&](std::array<Rational, 4> v) { return v; };
    std::array<Rational, 4> r{};
    if (i == 0) {
        r = entry({0, 0, 0, 0});
        r[j] = 1;
    } else if (j == 0) {
        r = entry({0, 0, 0, 0});
        r[i] = 1;
    } else if (i == j) {
        // v1^2 = d v1 - bc and cyclic
        const Rational tr[4] = {0, d, e, f};
        const Rational nm[4] = {0, b * c, c * a, a * b};
        r = entry({-nm[i], 0, 0, 0});
        r[i] += tr[i];
    } else if (i == 1 && j == 2) {
        r = entry({c * f, 0, 0, -c});
    } else if (i == 2 && j == 3) {
        r = entry({a * d, -a, 0, 0});
    } else if (i == 3 && j == 1) {
        r = entry({b * e, 0, -b, 0});
    } else if (i == 2 && j == 1) {
        r = entry({-d * e, e, d, c});
    } else if (i == 3 && j == 2) {
        r = entry({-e * f, a, f, e});
    } else if (i == 1 && j == 3) {
        r = entry({-d * f, f, b, d});
    }
    return r[k];
}

}  // namespace

TEST_CASE("ring from identity form is the Lipschitz pattern") {
    auto ring = ring_from_form(TernaryForm(1, 1, 1, 0, 0, 0));
    QuatQ v1 = QuatQ::basis(ring, 1), v2 = QuatQ::basis(ring, 2), v3 = QuatQ::basis(ring, 3);
    CHECK(v1 * v1 == QuatQ::scalar(ring, -1));
    CHECK(v1 * v2 == -v3);
}

TEST_CASE("ring from the Hurwitz form") {
    auto ring = ring_from_form(TernaryForm(1, 1, 1, 1, 1, 1));
    QuatQ one = QuatQ::one(ring);
    QuatQ v1 = QuatQ::basis(ring, 1), v2 = QuatQ::basis(ring, 2), v3 = QuatQ::basis(ring, 3);
    CHECK(v1 * v1 == v1 - one);
    CHECK(v2 * v1 == -one + v1 + v2 + v3);
    CHECK(v1.norm() == 1);
    CHECK(one.trace() == 2);
}

TEST_CASE("zero form collapses all basis products") {
    auto ring = ring_from_form(TernaryForm(0, 0, 0, 0, 0, 0));
    for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j)
            CHECK((QuatQ::basis(ring, i) * QuatQ::basis(ring, j)).is_zero());
}

TEST_CASE("unit element and ring mismatch") {
    Rng rng(11);
    auto ring = ring_from_form(TernaryForm(1, 2, 3, 0, 1, 0));
    for (int t = 0; t < 20; ++t) {
        QuatQ x = random_elt(rng, ring);
        CHECK(QuatQ::one(ring) * x == x);
        CHECK(x * QuatQ::one(ring) == x);
    }
    auto other = ring_from_form(TernaryForm(1, 1, 1, 1, 1, 1));
    CHECK_THROWS_AS((void)(QuatQ::one(ring) * QuatQ::one(other)), std::invalid_argument);
}

TEST_CASE("pairing doubles the norm") {
    Rng rng(12);
    for (int t = 0; t < 50; ++t) {
        auto ring = ring_from_form(random_form(rng));
        QuatQ x = random_elt(rng, ring);
        // independent route: tr(x x^*) through the multiplication table
        CHECK(pair(x, x) == (x * x.conj()).trace());
        CHECK(pair(x, x) == 2 * x.norm());
    }
}

TEST_CASE("imaginary part") {
    auto hurwitz = ring_from_form(TernaryForm(1, 1, 1, 1, 1, 1));
    CHECK(QuatQ::one(hurwitz).imaginary_part().is_zero());
    QuatQ v1 = QuatQ::basis(hurwitz, 1);
    QuatQ im = v1.imaginary_part();
    CHECK(im.x[0] == Rational(-1, 2));
    CHECK(im.x[1] == 1);
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        QuatQ x = random_elt(rng, hurwitz);
        CHECK(x.imaginary_part().imaginary_part() == x.imaginary_part());
        CHECK(x.imaginary_part().trace() == 0);
    }
}

TEST_CASE("associativity, anti-involution, rank-2 identity, left trace") {
    Rng rng(14);
    for (int r = 0; r < 20; ++r) {
        auto ring = ring_from_form(random_form(rng));
        for (int t = 0; t < 25; ++t) {
            QuatQ x = random_elt(rng, ring), y = random_elt(rng, ring), z = random_elt(rng, ring);
            CHECK((x * y) * z == x * (y * z));
            CHECK((x * y).conj() == y.conj() * x.conj());
            CHECK(x * x == x.trace() * x - QuatQ::scalar(ring, x.norm()));
        }
        for (int t = 0; t < 10; ++t) {
            QuatQ x = random_elt(rng, ring);
            Rational lt = 0;
            for (int s = 0; s < 4; ++s) lt += (x * QuatQ::basis(ring, s)).x[s];
            CHECK(lt == 2 * x.trace());
        }
    }
}

TEST_CASE("Clifford table equals the good-basis law table") {
    Rng rng(15);
    std::vector<TernaryForm> forms = {TernaryForm(1, 1, 1, 0, 0, 0), TernaryForm(1, 1, 1, 1, 1, 1),
                                      TernaryForm(0, 0, 0, 0, 0, 0), TernaryForm(2, 3, 5, 1, 1, 1)};
    for (int t = 0; t < 30; ++t) forms.push_back(random_form(rng));
    for (const auto& f : forms) {
        auto ring = ring_from_form(f);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) CHECK(ring->table(i, j, k) == law_table(f, i, j, k));
    }
}

TEST_CASE("element text round trip") {
    auto ring = ring_from_form(TernaryForm(1, 1, 1, 1, 1, 1));
    QuatQ x(ring, {Rational(1, 2), Rational(-3), Rational(0), Rational(7, 3)});
    CHECK(x.to_string() == "1/2 -3 0 7/3");
    CHECK(rat_from_string("-3/6") == Rational(-1, 2));
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}
