#include <array>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <vector>

#include "fgsp6/group.hpp"
#include "fgsp6/verify_cache.hpp"

namespace fgsp6 {
namespace {

using i128 = __int128;

inline void int_assign(i128& dst, std::int64_t v) { dst = v; }
inline void int_assign(Integer& dst, std::int64_t v) { dst = static_cast<long>(v); }
inline void int_assign(i128& dst, const Integer& v) {
    // |v| < 2^126 guaranteed by the caller's bit gate
    i128 acc = 0;
    for (std::size_t li = mpz_size(v.get_mpz_t()); li-- > 0;)
        acc = (acc << 64) | static_cast<i128>(mpz_getlimbn(v.get_mpz_t(), li));
    dst = mpz_sgn(v.get_mpz_t()) < 0 ? -acc : acc;
}
inline void int_assign(Integer& dst, const Integer& v) { dst = v; }

inline bool int_is_zero(const i128& v) { return v == 0; }
inline bool int_is_zero(const Integer& v) { return v == 0; }

inline std::string int_str(const i128& v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}
inline std::string int_str(const Integer& v) { return v.get_str(); }

// Ring structure constants over the engine's integer type.
template <class Int>
struct RingConsts {
    Int tab[4][4][4];
    Int trc[4];
    Int g4[4][4];
    Int gj[15][15];

    explicit RingConsts(const QuaternionRing& ring) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                int_assign(g4[i][j], ring.gram(i, j).get_num());
                for (int k = 0; k < 4; ++k) int_assign(tab[i][j][k], ring.table(i, j, k).get_num());
            }
        for (int s = 0; s < 4; ++s) int_assign(trc[s], ring.basis_trace(s).get_num());
        for (int i = 0; i < 15; ++i)
            for (int j = 0; j < 15; ++j) int_assign(gj[i][j], Integer(0));
        for (int i = 0; i < 3; ++i) int_assign(gj[i][i], Integer(1));
        for (int s = 0; s < 3; ++s)
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q)
                    int_assign(gj[3 + 4 * s + p][3 + 4 * s + q], ring.gram(p, q).get_num());
    }

    void qmul(const Int* x, const Int* y, Int* out) const {
        for (int k = 0; k < 4; ++k) out[k] = 0;
        for (int i = 0; i < 4; ++i) {
            if (int_is_zero(x[i])) continue;
            for (int j = 0; j < 4; ++j) {
                if (int_is_zero(y[j])) continue;
                Int p = x[i] * y[j];
                for (int k = 0; k < 4; ++k)
                    if (!int_is_zero(tab[i][j][k])) out[k] += p * tab[i][j][k];
            }
        }
    }
    void qconj(const Int* x, Int* out) const {
        Int t = trc[0] * x[0];
        for (int s = 1; s < 4; ++s) t += trc[s] * x[s];
        out[0] = t - x[0];
        for (int s = 1; s < 4; ++s) out[s] = -x[s];
    }
    Int qpair(const Int* u, const Int* v) const {
        Int acc = 0;
        for (int s = 0; s < 4; ++s) {
            if (int_is_zero(u[s])) continue;
            for (int t = 0; t < 4; ++t)
                if (!int_is_zero(g4[s][t])) acc += u[s] * v[t] * g4[s][t];
        }
        return acc;
    }

    // J coordinates: (c1, c2, c3, a1[4], a2[4], a3[4])
    void jcross(const Int* x, const Int* y, Int* out) const {
        for (int t = 0; t < 3; ++t) {
            int u = (t + 1) % 3, v = (t + 2) % 3;
            out[t] = x[u] * y[v] + y[u] * x[v] - qpair(x + 3 + 4 * t, y + 3 + 4 * t);
        }
        Int xc[3][4], yc[3][4];
        for (int s = 0; s < 3; ++s) {
            qconj(x + 3 + 4 * s, xc[s]);
            qconj(y + 3 + 4 * s, yc[s]);
        }
        // a-slot t: conj(a_{t+2}(x)) conj(a_{t+1}(y)) + conj(a_{t+2}(y)) conj(a_{t+1}(x))
        //           - c_t(x) a_t(y) - c_t(y) a_t(x)
        Int p1[4], p2[4];
        for (int t = 0; t < 3; ++t) {
            int u = (t + 1) % 3, v = (t + 2) % 3;
            qmul(xc[v], yc[u], p1);
            qmul(yc[v], xc[u], p2);
            for (int k = 0; k < 4; ++k)
                out[3 + 4 * t + k] =
                    p1[k] + p2[k] - x[t] * y[3 + 4 * t + k] - y[t] * x[3 + 4 * t + k];
        }
    }
    void jdual(const Int* x, Int* out) const {
        for (int i = 0; i < 3; ++i) out[i] = x[i];
        for (int s = 0; s < 3; ++s)
            for (int p = 0; p < 4; ++p) {
                Int acc = 0;
                for (int q = 0; q < 4; ++q)
                    if (!int_is_zero(g4[p][q])) acc += g4[p][q] * x[3 + 4 * s + q];
                out[3 + 4 * s + p] = acc;
            }
    }
    static Int jdot(const Int* x, const Int* y) {
        Int acc = 0;
        for (int i = 0; i < 15; ++i)
            if (!int_is_zero(x[i])) acc += x[i] * y[i];
        return acc;
    }

    // symplectic pairing of basis vectors i, j
    Int sym_basis(int i, int j) const {
        Int r = 0;
        if (i == 0 && j == 31) r = 1;
        else if (i == 31 && j == 0) r = -1;
        else if (1 <= i && i <= 15 && 16 <= j && j <= 30) r = -gj[i - 1][j - 16];
        else if (16 <= i && i <= 30 && 1 <= j && j <= 15) r = gj[i - 16][j - 1];
        return r;
    }
};

// The two checks, templated on the working integer type.  `rows` holds the
// integerized matrix (row i = image of basis vector i, times denom).
//
// Symplectic: nd * <row_i, row_j> == denom^2 * nn * <e_i, e_j>.
// Quartic:    nd^2 * P12(rows at multiset) == denom^4 * nn^2 * rhs12[ms],
// where P12 is 12 times the polarized quartic form and rhs12 holds its
// values on basis multisets.  Multisets run in lexicographic order; the
// first failure wins.
template <class Int, class Rhs>
std::optional<std::string> run_engine(const QuaternionRing& ring,
                                      const std::vector<std::array<Int, 32>>& rows,
                                      const Int& nn, const Int& nd, const Int& denom,
                                      const Rhs& rhs12, std::vector<Int>* collect_p12) {
    RingConsts<Int> rc(ring);

    std::array<Int, 32> a, d;
    for (int i = 0; i < 32; ++i) {
        a[i] = rows[i][0];
        d[i] = rows[i][31];
    }
    auto bptr = [&](int i) { return rows[i].data() + 1; };
    auto cptr = [&](int i) { return rows[i].data() + 16; };

    std::vector<std::array<Int, 15>> bhat(32), chat(32);
    for (int i = 0; i < 32; ++i) {
        rc.jdual(bptr(i), bhat[i].data());
        rc.jdual(cptr(i), chat[i].data());
    }

    if (!collect_p12) {
        // symplectic form on all basis pairs
        Int fs = denom * denom * nn;
        for (int i = 0; i < 32; ++i)
            for (int j = 0; j < 32; ++j) {
                Int lhs = a[i] * d[j] - d[i] * a[j] - rc.jdot(bptr(i), chat[j].data()) +
                          rc.jdot(cptr(i), bhat[j].data());
                if (nd * lhs != fs * rc.sym_basis(i, j)) {
                    std::ostringstream os;
                    os << "symplectic similitude fails at basis pair (" << i << "," << j << ")";
                    return os.str();
                }
            }
    }

    // pair and triple offset tables
    int pbase[32], tbase[32][32];
    int np = 0;
    for (int i = 0; i < 32; ++i) {
        pbase[i] = np - i;          // index of (i,j) is pbase[i] + j
        np += 32 - i;
    }
    int nt = 0;
    for (int i = 0; i < 32; ++i)
        for (int j = i; j < 32; ++j) {
            tbase[i][j] = nt - j;   // index of (i,j,k) is tbase[i][j] + k
            nt += 32 - j;
        }

    std::vector<std::array<Int, 15>> bx(np), cx(np), cxhat(np);
    std::vector<Int> q2(np);
    for (int i = 0; i < 32; ++i)
        for (int j = i; j < 32; ++j) {
            int p = pbase[i] + j;
            rc.jcross(bptr(i), bptr(j), bx[p].data());
            rc.jcross(cptr(i), cptr(j), cx[p].data());
            rc.jdual(cx[p].data(), cxhat[p].data());
            q2[p] = a[i] * d[j] + a[j] * d[i] - rc.jdot(bptr(i), chat[j].data()) -
                    rc.jdot(bptr(j), chat[i].data());
        }

    std::vector<Int> tri_b(nt), tri_c(nt);
    for (int i = 0; i < 32; ++i)
        for (int j = i; j < 32; ++j) {
            int p = pbase[i] + j;
            for (int k = j; k < 32; ++k) {
                int t = tbase[i][j] + k;
                tri_b[t] = rc.jdot(bx[p].data(), bhat[k].data());
                tri_c[t] = rc.jdot(cx[p].data(), chat[k].data());
            }
        }

    Int f1 = nd * nd;
    Int f2 = denom * denom;
    f2 = f2 * f2 * nn * nn;
    std::size_t ms = 0;
    for (int i = 0; i < 32; ++i)
        for (int j = i; j < 32; ++j)
            for (int k = j; k < 32; ++k)
                for (int l = k; l < 32; ++l, ++ms) {
                    int pij = pbase[i] + j, pkl = pbase[k] + l;
                    int pik = pbase[i] + k, pjl = pbase[j] + l;
                    int pil = pbase[i] + l, pjk = pbase[j] + k;
                    Int p12 = q2[pij] * q2[pkl] + q2[pik] * q2[pjl] + q2[pil] * q2[pjk];
                    Int tri = a[i] * tri_c[tbase[j][k] + l] + a[j] * tri_c[tbase[i][k] + l] +
                              a[k] * tri_c[tbase[i][j] + l] + a[l] * tri_c[tbase[i][j] + k];
                    tri += d[i] * tri_b[tbase[j][k] + l] + d[j] * tri_b[tbase[i][k] + l] +
                           d[k] * tri_b[tbase[i][j] + l] + d[l] * tri_b[tbase[i][j] + k];
                    Int t4 = RingConsts<Int>::jdot(bx[pij].data(), cxhat[pkl].data()) +
                             RingConsts<Int>::jdot(bx[pkl].data(), cxhat[pij].data()) +
                             RingConsts<Int>::jdot(bx[pik].data(), cxhat[pjl].data()) +
                             RingConsts<Int>::jdot(bx[pjl].data(), cxhat[pik].data()) +
                             RingConsts<Int>::jdot(bx[pil].data(), cxhat[pjk].data()) +
                             RingConsts<Int>::jdot(bx[pjk].data(), cxhat[pil].data());
                    p12 += tri + tri - t4 - t4;
                    if (collect_p12) {
                        collect_p12->push_back(p12);
                    } else {
                        Int want;
                        int_assign(want, rhs12[ms]);
                        if (f1 * p12 != f2 * want) {
                            std::ostringstream os;
                            os << "quartic similitude fails at basis quadruple (" << i << "," << j
                               << "," << k << "," << l << "): 12*P(rows)=" << int_str(p12)
                               << ", expected rhs " << int_str(want);
                            return os.str();
                        }
                    }
                }
    return std::nullopt;
}

std::vector<std::array<Integer, 32>> identity_rows() {
    std::vector<std::array<Integer, 32>> rows(32);
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) rows[i][j] = (i == j) ? 1 : 0;
    return rows;
}

double log2_of(const Integer& z) {
    return static_cast<double>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

struct NoRhs {
    std::int64_t operator[](std::size_t) const { return 0; }
};

}  // namespace

QuaternionRing::VerifyCache::VerifyCache(const QuaternionRing& ring) {
    // exact basis values of 12 * the polarized quartic, via the wide engine
    auto rows = identity_rows();
    Integer one(1);
    rhs12z.reserve(52360);
    run_engine<Integer, NoRhs>(ring, rows, one, one, one, NoRhs{}, &rhs12z);

    i64_ok = ring.fits_i64();
    if (i64_ok) {
        rhs12.reserve(rhs12z.size());
        for (const auto& z : rhs12z) {
            if (!z.fits_slong_p()) {
                i64_ok = false;
                rhs12.clear();
                break;
            }
            rhs12.push_back(z.get_si());
        }
    }
    for (int i = 0; i < 15; ++i)
        for (int j = 0; j < 15; ++j) gram_j[i][j] = 0;
    if (i64_ok) {
        for (int i = 0; i < 3; ++i) gram_j[i][i] = 1;
        for (int s = 0; s < 3; ++s)
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q) gram_j[3 + 4 * s + p][3 + 4 * s + q] = ring.gram_i64(p, q);
    }

    // Worst-case growth of intermediates in the int128 path, as a function
    // of E = max row entry.  All bounds are deliberately loose.
    double tmax = 1, g4max = 1, trmax = 1, rhsmax = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            g4max = std::max(g4max, std::abs(ring.gram(i, j).get_d()));
            for (int k = 0; k < 4; ++k) tmax = std::max(tmax, std::abs(ring.table(i, j, k).get_d()));
        }
    for (int s = 0; s < 4; ++s) trmax = std::max(trmax, std::abs(ring.basis_trace(s).get_d()));
    for (const auto& z : rhs12z) rhsmax = std::max(rhsmax, std::abs(z.get_d()));
    double cconj = 3 + 3 * trmax;
    double cx = 32 * tmax * cconj * cconj + 16 * g4max + 4;       // cross entries <= cx E^2
    double cq2 = 2 + 450 * g4max;                                 // q2 <= cq2 E^2
    double ctri = 225 * g4max * cx;                               // trilinear <= ctri E^3
    double ct4 = 225 * g4max * cx * cx;                           // pair-pair <= ct4 E^4
    double cp12 = 3 * cq2 * cq2 + 16 * ctri + 12 * ct4;
    log2_row_limit = std::log2(std::max(cp12, rhsmax));
}

std::optional<std::string> group_membership_failure(const MatQ& m, const Rational& nu,
                                                    const RingPtr& ring) {
    if (m.rows() != 32 || m.cols() != 32) return "matrix must be 32x32";
    if (nu == 0) return "similitude must be nonzero";
    auto& cache = ring->verify_cache();

    Integer denom(1);
    for (std::size_t i = 0; i < 32; ++i)
        for (std::size_t j = 0; j < 32; ++j) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), m(i, j).get_den().get_mpz_t());

    std::vector<std::array<Integer, 32>> rows(32);
    double log2e = 0;
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) {
            rows[i][j] = m(i, j).get_num() * (denom / m(i, j).get_den());
            if (rows[i][j] != 0) log2e = std::max(log2e, log2_of(rows[i][j]));
        }
    const Integer nn = nu.get_num(), nd = nu.get_den();

    bool narrow = cache.i64_ok;
    if (narrow) {
        double lhs_bits = cache.log2_row_limit + 4 * log2e + 2 * log2_of(nd) + 8;
        double rhs_bits = 4 * log2_of(denom) + 2 * log2_of(nn) + cache.log2_row_limit + 8;
        narrow = lhs_bits < 120 && rhs_bits < 120;
    }
    if (narrow) {
        std::vector<std::array<i128, 32>> rows128(32);
        for (int i = 0; i < 32; ++i)
            for (int j = 0; j < 32; ++j) int_assign(rows128[i][j], rows[i][j]);
        i128 nn1, nd1, dd1;
        int_assign(nn1, nn);
        int_assign(nd1, nd);
        int_assign(dd1, denom);
        return run_engine<i128>(*ring, rows128, nn1, nd1, dd1, cache.rhs12, nullptr);
    }
    return run_engine<Integer>(*ring, rows, nn, nd, denom, cache.rhs12z, nullptr);
}

}  // namespace fgsp6
