#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fgsp6/clifford.hpp"
#include "fgsp6/random.hpp"

using namespace fgsp6;

namespace {

TernaryForm random_form(Rng& rng, long lo = -5, long hi = 5) {
    return TernaryForm(rng.next_long(lo, hi), rng.next_long(lo, hi), rng.next_long(lo, hi),
                       rng.next_long(lo, hi), rng.next_long(lo, hi), rng.next_long(lo, hi));
}

TernaryForm random_posdef_form(Rng& rng) {
    for (;;) {
        TernaryForm t = random_form(rng, 0, 4);
        if (t.is_positive_definite()) return t;
    }
}

// extract the form of a good basis {1, w1, w2, w3} from its products
TernaryForm form_from_good_basis(const std::array<QuatQ, 3>& w) {
    StructureConstants sc = structure_constants(w);
    auto shift = good_basis_shift(sc);
    REQUIRE(shift[0] == 0);
    REQUIRE(shift[1] == 0);
    REQUIRE(shift[2] == 0);
    Rational a = -sc.s[1][2][0], b = -sc.s[2][0][1], c = -sc.s[0][1][2];
    Rational d = w[0].trace(), e = w[1].trace(), f = w[2].trace();
    return TernaryForm(a.get_num(), b.get_num(), c.get_num(), d.get_num(), e.get_num(),
                       f.get_num());
}

MatQ random_unimodular(Rng& rng) {
    for (;;) {
        MatQ k(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) k(i, j) = rng.next_long(-2, 2);
        Rational d = k.det();
        if (d == 1 || d == -1) return k;
    }
}

}  // namespace

TEST_CASE("good basis shift identifies translated bases") {
    Rng rng(51);
    // an already-good basis has zero shifts
    auto hur = ring_from_form(TernaryForm(1, 1, 1, 1, 1, 1));
    std::array<QuatQ, 3> v{QuatQ::basis(hur, 1), QuatQ::basis(hur, 2), QuatQ::basis(hur, 3)};
    auto s0 = good_basis_shift(structure_constants(v));
    CHECK(s0 == std::array<Rational, 3>{0, 0, 0});

    // Hurwitz basis shifted by (1, 2, 3)
    std::array<QuatQ, 3> w{v[0] + QuatQ::scalar(hur, 1), v[1] + QuatQ::scalar(hur, 2),
                           v[2] + QuatQ::scalar(hur, 3)};
    auto s1 = good_basis_shift(structure_constants(w));
    CHECK(s1 == std::array<Rational, 3>{1, 2, 3});

    // random rings, random integer shifts
    for (int t = 0; t < 100; ++t) {
        auto ring = ring_from_form(random_form(rng));
        std::array<QuatQ, 3> u;
        std::array<Rational, 3> shift;
        for (int i = 0; i < 3; ++i) {
            shift[i] = rng.next_long(-4, 4);
            u[i] = QuatQ::basis(ring, i + 1) + QuatQ::scalar(ring, shift[i]);
        }
        CHECK(good_basis_shift(structure_constants(u)) == shift);
    }

    StructureConstants bad{};
    bad.s[1][2][1] = 1;  // breaks the symmetry pair s23^2 = s31^1
    CHECK_THROWS_AS(good_basis_shift(bad), std::invalid_argument);
}

TEST_CASE("reduced discriminants and maximality") {
    CHECK(reduced_discriminant(TernaryForm(1, 1, 1, 1, 1, 1)) == 2);
    CHECK(is_maximal(TernaryForm(1, 1, 1, 1, 1, 1)));
    CHECK(reduced_discriminant(TernaryForm(1, 1, 1, 0, 0, 0)) == 4);
    CHECK(!is_maximal(TernaryForm(1, 1, 1, 0, 0, 0)));
    CHECK(reduced_discriminant(TernaryForm(1, 1, 2, 0, 0, 0)) == 8);
    CHECK(!is_maximal(TernaryForm(1, 1, 2, 0, 0, 0)));
    CHECK_THROWS_AS(is_maximal(TernaryForm(-1, 1, 1, 0, 0, 0)), std::domain_error);
}

TEST_CASE("superorder witnesses certify non-maximality") {
    auto w = find_superorder(TernaryForm(1, 1, 1, 0, 0, 0), 2);
    REQUIRE(w.has_value());
    // the Hurwitz order is maximal: nothing at index 2 or 3
    CHECK(!find_superorder(TernaryForm(1, 1, 1, 1, 1, 1), 2).has_value());
    CHECK(!find_superorder(TernaryForm(1, 1, 1, 1, 1, 1), 3).has_value());
}

TEST_CASE("suborder forms and the closure oracle") {
    TernaryForm idf(1, 1, 1, 0, 0, 0);
    auto ring = ring_from_form(idf);
    MatQ m(3, 3);
    m(0, 0) = 1;
    m(1, 1) = 2;
    m(2, 2) = 2;
    CHECK(suborder_test(idf, m));
    auto s = suborder_form_rational(idf, m);
    CHECK(s == std::array<Rational, 6>{4, 1, 1, 0, 0, 0});
    CHECK(lattice_closed_under_multiplication(ring, m));

    MatQ m2 = MatQ::identity(3);
    m2(2, 2) = 2;
    CHECK(!suborder_test(idf, m2));
    CHECK(!lattice_closed_under_multiplication(ring, m2));

    CHECK(suborder_test(idf, MatQ::identity(3)));
    auto sid = suborder_form_rational(idf, MatQ::identity(3));
    CHECK(sid == std::array<Rational, 6>{1, 1, 1, 0, 0, 0});

    CHECK_THROWS_AS(suborder_test(idf, MatQ(3, 3)), std::domain_error);
}

TEST_CASE("suborder enumeration matches the brute-force count") {
    TernaryForm idf(1, 1, 1, 0, 0, 0);
    auto subs1 = enumerate_suborders(idf, 1);
    REQUIRE(subs1.size() == 1);
    CHECK(subs1[0].hnf == MatQ::identity(3));
    CHECK(subs1[0].form == idf);

    auto ring = ring_from_form(idf);
    auto all2 = hnf_matrices(2);
    CHECK(all2.size() == 8);  // identity plus the 7 classes of determinant 2
    long closed = 0;
    for (const auto& m : all2)
        if (m.det() == 2 && lattice_closed_under_multiplication(ring, m)) ++closed;
    auto subs2 = enumerate_suborders(idf, 2);
    long via_test = 0;
    for (const auto& s : subs2)
        if (s.index == 2) ++via_test;
    CHECK(via_test == closed);
    for (const auto& s : subs2) CHECK(suborder_test(idf, s.hnf));
}

TEST_CASE("four-way equivalence for index lattices") {
    Rng rng(52);
    for (auto f : {TernaryForm(1, 1, 1, 0, 0, 0), TernaryForm(1, 1, 1, 1, 1, 1),
                   TernaryForm(2, 3, 5, 1, 1, 1)}) {
        auto o = order_from_form(f);
        for (const auto& m : hnf_matrices(6)) {
            bool closed = lattice_closed_under_multiplication(o.ring, m);
            bool halfint = suborder_test(f, m);
            bool amat = transformed_a_matrix_integral(o, m);
            CHECK(closed == halfint);
            CHECK(halfint == amat);
            if (halfint) {
                // A' is the good-based matrix of the suborder ring
                auto s = suborder_form_rational(f, m);
                TernaryForm sub(s[0].get_num(), s[1].get_num(), s[2].get_num(), s[3].get_num(),
                                s[4].get_num(), s[5].get_num());
                // discriminant scales by the lattice index
                CHECK(Rational(sub.four_det()) == m.det() * f.four_det());
                // the primed basis generates a multiplicatively closed lattice
                auto ap = transformed_a_matrix(o, m);
                MatQ span(3, 3);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) span(j, i) = ap.a[i].x[j + 1];
                CHECK(lattice_closed_under_multiplication(o.ring, span));
            }
        }
    }
}

TEST_CASE("scaled orders scale the form") {
    Rng rng(53);
    for (int t = 0; t < 100; ++t) {
        auto f = random_form(rng);
        auto ring = ring_from_form(f);
        long lambda = rng.next_long(1, 4);
        std::array<QuatQ, 3> w;
        for (int i = 0; i < 3; ++i) w[i] = Rational(lambda) * QuatQ::basis(ring, i + 1);
        TernaryForm scaled = form_from_good_basis(w);
        CHECK(scaled == TernaryForm(f.a * lambda, f.b * lambda, f.c * lambda, f.d * lambda,
                                    f.e * lambda, f.f * lambda));
    }
}

TEST_CASE("ring to form round trip") {
    Rng rng(54);
    for (int t = 0; t < 500; ++t) {
        auto f = random_form(rng);
        auto ring = ring_from_form(f);
        std::array<QuatQ, 3> v{QuatQ::basis(ring, 1), QuatQ::basis(ring, 2),
                               QuatQ::basis(ring, 3)};
        CHECK(form_from_good_basis(v) == f);
    }
}

TEST_CASE("imaginary parts determine rank-one matrices with spanning off-diagonals") {
    Rng rng(55);
    for (int t = 0; t < 100; ++t) {
        auto f = random_form(rng);
        if (f.four_det() == 0) continue;  // need B/(Q 1) spanned by the v_i
        auto o = order_from_form(f);
        auto a1 = a_matrix(o);
        // second rank-one matrix with the same imaginary parts: shift the
        // good basis, landing in the same ring
        std::array<QuatQ, 3> w;
        std::array<Rational, 3> shift;
        for (int i = 0; i < 3; ++i) {
            shift[i] = rng.next_long(-3, 3);
            w[i] = QuatQ::basis(o.ring, i + 1) + QuatQ::scalar(o.ring, shift[i]);
        }
        auto sc = structure_constants(w);
        auto sh = good_basis_shift(sc);
        CHECK(sh == shift);  // so w_i - sh_i = v_i reproduces a1: equal imaginary parts force equality
        for (int i = 0; i < 3; ++i) {
            QuatQ vi = w[i] - QuatQ::scalar(o.ring, sh[i]);
            CHECK(vi.imaginary_part() == w[i].imaginary_part());
            CHECK(vi == QuatQ::basis(o.ring, i + 1));
        }
    }
}

TEST_CASE("form equivalence search") {
    TernaryForm hur(1, 1, 1, 1, 1, 1), idf(1, 1, 1, 0, 0, 0);
    auto self = forms_equivalent(hur, hur);
    REQUIRE(self.has_value());
    CHECK(transform_form(hur, *self) == hur);

    CHECK(!forms_equivalent(idf, hur).has_value());

    Rng rng(56);
    for (int t = 0; t < 30; ++t) {
        TernaryForm f = random_posdef_form(rng);
        MatQ k = random_unimodular(rng);
        TernaryForm g = transform_form(f, k);
        auto wit = forms_equivalent(f, g);
        REQUIRE(wit.has_value());
        CHECK(transform_form(f, *wit) == g);
    }
}

TEST_CASE("canonical class forms are transform-invariant") {
    Rng rng(57);
    for (int t = 0; t < 30; ++t) {
        TernaryForm f = random_posdef_form(rng);
        TernaryForm g = transform_form(f, random_unimodular(rng));
        CHECK(canonical_class_form(f) == canonical_class_form(g));
    }
}

TEST_CASE("coefficient tables parse and miss loudly") {
    std::istringstream in(
        "# sample table\n"
        "1 1 1 1 1 1 5/7\n"
        "\n"
        "1 1 1 0 0 0 2   # trailing comment\n");
    CoefficientTable tbl = CoefficientTable::parse(in);
    CHECK(tbl.size() == 2);
    CHECK(tbl.get(TernaryForm(1, 1, 1, 1, 1, 1)) == Rational(5, 7));
    CHECK_THROWS_AS(tbl.get(TernaryForm(2, 2, 2, 2, 2, 2)), MissingClassError);

    std::istringstream bad("1 2 3 4\n");
    CHECK_THROWS_AS(CoefficientTable::parse(bad), std::invalid_argument);
}

TEST_CASE("dirichlet coefficients against a double loop") {
    TernaryForm hur(1, 1, 1, 1, 1, 1);

    // single-term case
    CoefficientTable one;
    one.set(hur, Rational(9, 2));
    auto head = dirichlet_coefficients(hur, 4, one, 1);
    REQUIRE(head.size() == 1);
    CHECK(head[0] == std::pair<long, Rational>(1, Rational(9, 2)));

    // table over every class reachable at max_n = 4, synthetic values
    const long max_n = 4, weight = 4;
    CoefficientTable tbl;
    long stamp = 1;
    for (const auto& sub : enumerate_suborders(hur, max_n))
        for (long lam = 1; lam * sub.index.get_si() <= max_n; ++lam) {
            TernaryForm scaled(sub.form.a * lam, sub.form.b * lam, sub.form.c * lam,
                               sub.form.d * lam, sub.form.e * lam, sub.form.f * lam);
            try {
                tbl.get(scaled);
            } catch (const MissingClassError&) {
                tbl.set(scaled, Rational(stamp, 3));
                ++stamp;
            }
        }

    auto got = dirichlet_coefficients(hur, weight, tbl, max_n);

    // independent double loop over (lambda, HNF m)
    std::vector<Rational> want(max_n + 1, Rational(0));
    for (long lam = 1; lam <= max_n; ++lam)
        for (const auto& m : hnf_matrices(max_n / lam)) {
            if (!suborder_test(hur, m)) continue;
            long mu = m.det().get_num().get_si();
            if (lam * mu > max_n) continue;
            auto s = suborder_form_rational(hur, m);
            for (auto& x : s) x *= lam;
            TernaryForm scaled(s[0].get_num(), s[1].get_num(), s[2].get_num(), s[3].get_num(),
                               s[4].get_num(), s[5].get_num());
            Rational w = tbl.get(scaled);
            Rational muw = 1;
            for (long i = 0; i < std::abs(weight - 3); ++i) muw *= mu;
            if (weight - 3 < 0) muw = 1 / muw;
            want[lam * mu] += w * muw;
        }
    REQUIRE(got.size() == static_cast<std::size_t>(max_n));
    for (long n = 1; n <= max_n; ++n) CHECK(got[n - 1] == std::pair<long, Rational>(n, want[n]));

    CHECK_THROWS_AS(dirichlet_coefficients(hur, weight, one, 4), MissingClassError);
    CHECK_THROWS_AS(dirichlet_coefficients(TernaryForm(-1, 0, 0, 0, 0, 0), 4, one, 2),
                    std::domain_error);
}
