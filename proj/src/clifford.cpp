#include "fgsp6/clifford.hpp"

#include <algorithm>
#include <sstream>

namespace fgsp6 {
namespace {

bool all_integral(const MatQ& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_integer(m(i, j))) return false;
    return true;
}

Mat3B<Rational> scalar_mat3(const RingPtr& ring, const MatQ& m) {
    Mat3B<Rational> r(ring);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = QuatQ::scalar(ring, m(i, j));
    return r;
}

}  // namespace

StructureConstants structure_constants(const std::array<QuatQ, 3>& w) {
    MatQ basis(4, 4);
    for (int j = 0; j < 4; ++j) basis(0, j) = (j == 0) ? 1 : 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) basis(1 + i, j) = w[i].x[j];
    auto inv = basis.inverse();
    if (!inv) throw std::invalid_argument("1, w1, w2, w3 do not form a basis");

    StructureConstants sc;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            QuatQ prod = w[i] * w[j];
            // coordinates in {1, w1, w2, w3}: row vector times basis^{-1}
            Rational coord[4];
            for (int k = 0; k < 4; ++k) {
                coord[k] = 0;
                for (int s = 0; s < 4; ++s) coord[k] += prod.x[s] * (*inv)(s, k);
            }
            sc.s0[i][j] = coord[0];
            for (int k = 0; k < 3; ++k) sc.s[i][j][k] = coord[k + 1];
        }
    return sc;
}

std::array<Rational, 3> good_basis_shift(const StructureConstants& sc) {
    MatQ m = sc.shift_matrix();
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (m(i, j) != m(j, i))
                throw std::invalid_argument(
                    "structure constants violate the quaternion-ring symmetry");
    return {m(1, 2), m(2, 0), m(0, 1)};
}

JElement<Rational> a_matrix(const GoodBasedOrder& o) {
    JElement<Rational> h(o.ring);
    h.c = {Rational(o.form.a), Rational(o.form.b), Rational(o.form.c)};
    for (int s = 0; s < 3; ++s) h.a[s] = QuatQ::basis(o.ring, s + 1);
    return h;
}

bool is_squarefree(const Integer& n) {
    Integer m = abs(n);
    if (m == 0) return false;
    for (Integer p = 2; p * p <= m; ++p)
        if (m % (p * p) == 0) return false;
    return true;
}

bool is_maximal(const TernaryForm& t) {
    if (!t.is_positive_definite())
        throw std::domain_error("maximality test needs a positive-definite form");
    return is_squarefree(t.four_det());
}

MatQ cofactor_matrix(const MatQ& m) {
    auto inv = m.inverse();
    if (!inv) throw std::domain_error("cofactor of singular matrix");
    return inv->transpose() * m.det();
}

std::array<Rational, 6> suborder_form_rational(const TernaryForm& t, const MatQ& m) {
    auto inv = m.inverse();
    if (!inv) throw std::domain_error("singular index matrix");
    MatQ tp = *inv * t.half_integral_matrix() * cofactor_matrix(m);
    return {tp(0, 0), tp(1, 1), tp(2, 2), 2 * tp(1, 2), 2 * tp(0, 2), 2 * tp(0, 1)};
}

bool suborder_test(const TernaryForm& t, const MatQ& m) {
    if (!all_integral(m)) {
        if (m.det() == 0) throw std::domain_error("singular index matrix");
        return false;
    }
    auto s = suborder_form_rational(t, m);
    for (const auto& x : s)
        if (!is_integer(x)) return false;
    return true;
}

JElement<Rational> transformed_a_matrix(const GoodBasedOrder& o, const MatQ& m) {
    auto inv = m.inverse();
    if (!inv) throw std::domain_error("singular index matrix");
    auto prod = scalar_mat3(o.ring, *inv) * Mat3B<Rational>::from_jelement(a_matrix(o)) *
                scalar_mat3(o.ring, cofactor_matrix(m));
    return prod.to_jelement();
}

bool transformed_a_matrix_integral(const GoodBasedOrder& o, const MatQ& m) {
    JElement<Rational> h = transformed_a_matrix(o, m);
    for (int i = 0; i < 15; ++i)
        if (!is_integer(h.coord(i))) return false;
    return true;
}

bool lattice_closed_under_multiplication(const RingPtr& ring, const MatQ& m) {
    auto inv = m.inverse();
    if (!inv) throw std::domain_error("singular index matrix");
    std::array<QuatQ, 3> w;
    for (int i = 0; i < 3; ++i) {
        w[i] = QuatQ(ring);
        for (int j = 0; j < 3; ++j) w[i].x[j + 1] = m(j, i);
    }
    auto member = [&](const QuatQ& x) {
        if (!is_integer(x.x[0])) return false;
        for (int t = 0; t < 3; ++t) {
            Rational c = 0;
            for (int j = 0; j < 3; ++j) c += (*inv)(t, j) * x.x[j + 1];
            if (!is_integer(c)) return false;
        }
        return true;
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!member(w[i] * w[j])) return false;
    return true;
}

std::vector<MatQ> hnf_matrices(long det_bound) {
    std::vector<MatQ> out;
    for (long det = 1; det <= det_bound; ++det)
        for (long d1 = 1; d1 <= det; ++d1) {
            if (det % d1) continue;
            for (long d2 = 1; d2 * d1 <= det; ++d2) {
                if ((det / d1) % d2) continue;
                long d3 = det / (d1 * d2);
                for (long m12 = 0; m12 < d1; ++m12)
                    for (long m13 = 0; m13 < d1; ++m13)
                        for (long m23 = 0; m23 < d2; ++m23) {
                            MatQ m(3, 3);
                            m(0, 0) = d1;
                            m(1, 1) = d2;
                            m(2, 2) = d3;
                            m(0, 1) = m12;
                            m(0, 2) = m13;
                            m(1, 2) = m23;
                            out.push_back(std::move(m));
                        }
            }
        }
    return out;
}

std::vector<Suborder> enumerate_suborders(const TernaryForm& t, long index_bound) {
    if (index_bound < 1) throw std::domain_error("index bound must be >= 1");
    std::vector<Suborder> out;
    for (auto& m : hnf_matrices(index_bound)) {
        if (!suborder_test(t, m)) continue;
        auto s = suborder_form_rational(t, m);
        TernaryForm tf(s[0].get_num(), s[1].get_num(), s[2].get_num(), s[3].get_num(),
                       s[4].get_num(), s[5].get_num());
        Integer idx = m.det().get_num();
        out.push_back(Suborder{m, tf, idx});
    }
    return out;
}

std::vector<std::array<long, 3>> short_vectors(const TernaryForm& t, const Rational& bound) {
    if (!t.is_positive_definite())
        throw std::domain_error("short vectors need a positive-definite form");
    // exact LDL^T: q(x) = d0 (x0 + u01 x1 + u02 x2)^2 + d1 (x1 + u12 x2)^2 + d2 x2^2
    MatQ a = t.half_integral_matrix();
    Rational diag[3], u[3][3];
    for (int i = 0; i < 3; ++i) {
        diag[i] = a(i, i);
        for (int j = i + 1; j < 3; ++j) u[i][j] = a(i, j) / a(i, i);
        for (int r = i + 1; r < 3; ++r)
            for (int c = i + 1; c < 3; ++c) a(r, c) -= a(i, r) * a(i, c) / a(i, i);
    }
    auto floor_sqrt = [](const Rational& q) -> long {
        if (q < 0) return -1;
        Integer num = q.get_num(), den = q.get_den();
        Integer lo = 0, hi = 1;
        while (hi * hi * den <= num) hi *= 2;
        while (lo < hi) {
            Integer mid = (lo + hi + 1) / 2;
            if (mid * mid * den <= num)
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo.get_si();
    };
    auto rat_floor = [](const Rational& q) -> long {
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
        return f.get_si();
    };
    std::vector<std::array<long, 3>> out;
    if (bound < 0) return out;
    long b2 = floor_sqrt(bound / diag[2]);
    for (long x2 = -b2; x2 <= b2; ++x2) {
        Rational r2 = bound - diag[2] * x2 * x2;
        Rational c1 = u[1][2] * x2;
        long w1 = floor_sqrt(r2 / diag[1]);
        long mid1 = rat_floor(-c1);
        for (long x1 = mid1 - w1 - 1; x1 <= mid1 + w1 + 1; ++x1) {
            Rational in1 = x1 + c1;
            Rational r1 = r2 - diag[1] * in1 * in1;
            if (r1 < 0) continue;
            Rational c0 = u[0][1] * x1 + u[0][2] * x2;
            long w0 = floor_sqrt(r1 / diag[0]);
            long mid0 = rat_floor(-c0);
            for (long x0 = mid0 - w0 - 1; x0 <= mid0 + w0 + 1; ++x0) {
                if (x0 == 0 && x1 == 0 && x2 == 0) continue;
                if (t.evaluate(x0, x1, x2) <= bound) out.push_back({x0, x1, x2});
            }
        }
    }
    return out;
}

TernaryForm transform_form(const TernaryForm& t, const MatQ& k) {
    if (!all_integral(k)) throw std::domain_error("transform needs an integral matrix");
    Rational det = k.det();
    if (det != 1 && det != -1) throw std::domain_error("transform needs a unimodular matrix");
    // det(k) k^{-1} T c(k) = k^{-1} T (tk)^{-1}, positive definite again
    auto s = suborder_form_rational(t, k);
    for (auto& x : s) x *= det;
    return TernaryForm(s[0].get_num(), s[1].get_num(), s[2].get_num(), s[3].get_num(),
                       s[4].get_num(), s[5].get_num());
}

std::optional<MatQ> forms_equivalent(const TernaryForm& t1, const TernaryForm& t2) {
    if (!t1.is_positive_definite() || !t2.is_positive_definite())
        throw std::domain_error("form equivalence search needs positive-definite forms");
    if (t1.four_det() != t2.four_det()) return std::nullopt;
    // rows r_i of k satisfy r_i T2 r_j^T = (T1)_{ij}; diagonal first
    MatQ h1 = t1.half_integral_matrix(), h2 = t2.half_integral_matrix();
    Rational want_diag[3] = {h1(0, 0), h1(1, 1), h1(2, 2)};
    Rational bound = std::max(std::max(want_diag[0], want_diag[1]), want_diag[2]);
    auto vecs = short_vectors(t2, bound);
    std::vector<std::array<long, 3>> cand[3];
    for (const auto& v : vecs) {
        Rational q = t2.evaluate(v[0], v[1], v[2]);
        for (int i = 0; i < 3; ++i)
            if (q == want_diag[i]) cand[i].push_back(v);
    }
    auto pairing = [&](const std::array<long, 3>& x, const std::array<long, 3>& y) {
        Rational acc = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) acc += h2(i, j) * x[i] * y[j];
        return acc;
    };
    for (const auto& r0 : cand[0])
        for (const auto& r1 : cand[1]) {
            if (pairing(r0, r1) != h1(0, 1)) continue;
            for (const auto& r2 : cand[2]) {
                if (pairing(r0, r2) != h1(0, 2)) continue;
                if (pairing(r1, r2) != h1(1, 2)) continue;
                MatQ k(3, 3);
                for (int j = 0; j < 3; ++j) {
                    k(0, j) = r0[j];
                    k(1, j) = r1[j];
                    k(2, j) = r2[j];
                }
                Rational det = k.det();
                if (det == 1 || det == -1) return k;
            }
        }
    return std::nullopt;
}

// T -> k T tk realized through row choices: rows with q(r0) = a', q(r1) = b',
// q(r2) = c' give a transform with new diagonal (a', b', c').  Scanning the
// achievable norms in ascending lexicographic (a', b', c') order and then
// minimizing the full sextuple yields the class-least form; iterate to a
// fixed point in case the first pass lowers the search bound.
TernaryForm canonical_class_form(const TernaryForm& t) {
    if (!t.is_positive_definite())
        throw std::domain_error("canonical form needs a positive-definite form");
    TernaryForm cur = t;
    for (int rounds = 0; rounds < 32; ++rounds) {
        Rational bound(std::max(std::max(cur.a, cur.b), cur.c));
        auto vecs = short_vectors(cur, bound);
        std::map<Rational, std::vector<std::array<long, 3>>> by_norm;
        for (const auto& v : vecs) by_norm[cur.evaluate(v[0], v[1], v[2])].push_back(v);

        MatQ h = cur.half_integral_matrix();
        auto pairing = [&](const std::array<long, 3>& x, const std::array<long, 3>& y) -> Rational {
            Rational acc = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) acc += h(i, j) * x[i] * y[j];
            return acc;
        };
        std::optional<TernaryForm> best;
        for (auto ita = by_norm.begin(); ita != by_norm.end() && !best; ++ita)
            for (auto itb = ita; itb != by_norm.end() && !best; ++itb)
                for (auto itc = itb; itc != by_norm.end(); ++itc) {
                    for (const auto& r0 : ita->second)
                        for (const auto& r1 : itb->second)
                            for (const auto& r2 : itc->second) {
                                MatQ m(3, 3);
                                for (int c = 0; c < 3; ++c) {
                                    m(0, c) = r0[c];
                                    m(1, c) = r1[c];
                                    m(2, c) = r2[c];
                                }
                                Rational det = m.det();
                                if (det != 1 && det != -1) continue;
                                // the form with Gram m H tm: rows pair directly
                                Rational dd = 2 * pairing(r1, r2), ee = 2 * pairing(r0, r2),
                                         ff = 2 * pairing(r0, r1);
                                TernaryForm cand(ita->first.get_num(), itb->first.get_num(),
                                                 itc->first.get_num(), dd.get_num(), ee.get_num(),
                                                 ff.get_num());
                                if (!best || cand < *best) best = cand;
                            }
                    if (best) break;  // (a',b',c') is lex-minimal; sextuple settled
                }
        if (!best || !(*best < cur)) return cur;
        cur = *best;
    }
    return cur;
}

void CoefficientTable::set(const TernaryForm& t, const Rational& value) {
    by_class_[canonical_class_form(t)] = value;
}

const Rational& CoefficientTable::get(const TernaryForm& t) const {
    TernaryForm key = canonical_class_form(t);
    auto it = by_class_.find(key);
    if (it == by_class_.end()) throw MissingClassError(key);
    return it->second;
}

CoefficientTable CoefficientTable::parse(std::istream& in) {
    CoefficientTable tbl;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string tok[7];
        int n = 0;
        while (n < 7 && (is >> tok[n])) ++n;
        if (n == 0) continue;
        if (n != 7) throw std::invalid_argument("coefficient line needs 'a b c d e f value'");
        std::string extra;
        if (is >> extra) throw std::invalid_argument("trailing tokens on coefficient line");
        TernaryForm t = TernaryForm::from_string(tok[0] + " " + tok[1] + " " + tok[2] + " " +
                                                 tok[3] + " " + tok[4] + " " + tok[5]);
        tbl.set(t, rat_from_string(tok[6]));
    }
    return tbl;
}

std::vector<std::pair<long, Rational>> dirichlet_coefficients(const TernaryForm& t, long weight,
                                                              const CoefficientTable& coeffs,
                                                              long max_n) {
    if (!t.is_positive_definite())
        throw std::domain_error("Dirichlet coefficients need a positive-definite form");
    if (max_n < 1) throw std::domain_error("max_n must be >= 1");
    std::vector<Rational> acc(static_cast<std::size_t>(max_n) + 1, Rational(0));
    for (const auto& sub : enumerate_suborders(t, max_n)) {
        long mu = sub.index.get_si();
        // index weight mu^{weight - 3}
        Rational muw = 1;
        for (long i = 0; i < std::abs(weight - 3); ++i) muw *= mu;
        if (weight - 3 < 0) muw = 1 / muw;
        for (long lambda = 1; lambda * mu <= max_n; ++lambda) {
            TernaryForm scaled(sub.form.a * lambda, sub.form.b * lambda, sub.form.c * lambda,
                               sub.form.d * lambda, sub.form.e * lambda, sub.form.f * lambda);
            acc[static_cast<std::size_t>(lambda * mu)] += coeffs.get(scaled) * muw;
        }
    }
    std::vector<std::pair<long, Rational>> out;
    for (long n = 1; n <= max_n; ++n) out.emplace_back(n, acc[static_cast<std::size_t>(n)]);
    return out;
}

std::optional<std::array<Rational, 4>> find_superorder(const TernaryForm& t, long n) {
    if (n < 2) throw std::domain_error("superorder index must be >= 2");
    RingPtr ring = ring_from_form(t);
    auto member = [&](const QuatQ& y, const QuatQ& x) {
        // y in Z + Zv1 + Zv2 + Zv3 + Zx ?
        for (long j = 0; j < n; ++j) {
            bool ok = true;
            for (int s = 0; s < 4 && ok; ++s)
                if (!is_integer(y.x[s] - Rational(j) * x.x[s])) ok = false;
            if (ok) return true;
        }
        return false;
    };
    std::array<long, 4> k{};
    for (k[0] = 0; k[0] < n; ++k[0])
        for (k[1] = 0; k[1] < n; ++k[1])
            for (k[2] = 0; k[2] < n; ++k[2])
                for (k[3] = 0; k[3] < n; ++k[3]) {
                    if (k[0] == 0 && k[1] == 0 && k[2] == 0 && k[3] == 0) continue;
                    QuatQ x(ring);
                    for (int s = 0; s < 4; ++s) x.x[s] = Rational(k[s], n);
                    bool closed = member(x * x, x);
                    for (int s = 1; s < 4 && closed; ++s) {
                        QuatQ v = QuatQ::basis(ring, s);
                        closed = member(x * v, x) && member(v * x, x);
                    }
                    if (closed) return std::array<Rational, 4>{x.x[0], x.x[1], x.x[2], x.x[3]};
                }
    return std::nullopt;
}

}  // namespace fgsp6
