#ifndef FGSP6_QUAT_HPP
#define FGSP6_QUAT_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fgsp6/scalar.hpp"
#include "fgsp6/ternary_form.hpp"

namespace fgsp6 {

// Quaternion ring on the good basis {1, v1, v2, v3} presented by a ternary
// form via the even Clifford construction (v1 = e2e3, v2 = e3e1, v3 = e1e2).
// The dense structure-constant table is computed once here; everything
// downstream multiplies through it.  Values are immutable after creation.
class QuaternionRing {
public:
    static std::shared_ptr<const QuaternionRing> from_form(const TernaryForm& form);

    const TernaryForm& form() const { return form_; }

    // v_i * v_j = sum_k table(i,j,k) * basis_k, indices 0..3 with basis_0 = 1.
    const Rational& table(int i, int j, int k) const { return tab_[i][j][k]; }

    // Pairing Gram: gram(s,t) = (basis_s, basis_t) = tr(basis_s basis_t^*).
    const Rational& gram(int s, int t) const { return gram_[s][t]; }

    // tr(basis_s): (2, d, e, f).
    const Rational& basis_trace(int s) const { return trace_[s]; }

    // int64 mirrors for the fast verification path; valid only if fits_i64().
    bool fits_i64() const { return fits_i64_; }
    std::int64_t table_i64(int i, int j, int k) const { return tab64_[i][j][k]; }
    std::int64_t gram_i64(int s, int t) const { return gram64_[s][t]; }

    struct VerifyCache;  // per-ring data for group-element verification
    VerifyCache& verify_cache() const;

    ~QuaternionRing();

private:
    QuaternionRing() = default;

    TernaryForm form_;
    Rational tab_[4][4][4];
    Rational trace_[4];
    Rational gram_[4][4];
    bool fits_i64_ = false;
    std::int64_t tab64_[4][4][4] = {};
    std::int64_t gram64_[4][4] = {};
    mutable std::unique_ptr<VerifyCache> vcache_;
};

using RingPtr = std::shared_ptr<const QuaternionRing>;

inline RingPtr ring_from_form(const TernaryForm& form) { return QuaternionRing::from_form(form); }

inline void require_same_ring(const RingPtr& r1, const RingPtr& r2) {
    if (r1 == r2) return;
    if (!r1 || !r2 || r1->form() != r2->form())
        throw std::invalid_argument("quaternion elements from different rings");
}

// Element t + x1 v1 + x2 v2 + x3 v3 with coordinates in K (Rational or
// GaussianRational).  Conjugation acts on the quaternion part only; the
// scalar involution sigma is a separate, coordinate-wise operation.
template <class K>
struct QuaternionElement {
    RingPtr ring;
    std::array<K, 4> x{K(0), K(0), K(0), K(0)};

    QuaternionElement() = default;
    explicit QuaternionElement(RingPtr r) : ring(std::move(r)) {}
    QuaternionElement(RingPtr r, std::array<K, 4> c) : ring(std::move(r)), x(std::move(c)) {}

    static QuaternionElement one(RingPtr r) {
        QuaternionElement e(std::move(r));
        e.x[0] = K(1);
        return e;
    }
    static QuaternionElement basis(RingPtr r, int s) {
        QuaternionElement e(std::move(r));
        e.x[s] = K(1);
        return e;
    }
    static QuaternionElement scalar(RingPtr r, const K& t) {
        QuaternionElement e(std::move(r));
        e.x[0] = t;
        return e;
    }

    bool is_zero() const {
        for (const K& c : x)
            if (!scalar_is_zero(c)) return false;
        return true;
    }

    QuaternionElement operator-() const {
        QuaternionElement r(ring);
        for (int s = 0; s < 4; ++s) r.x[s] = -x[s];
        return r;
    }
    QuaternionElement& operator+=(const QuaternionElement& o) {
        require_same_ring(ring, o.ring);
        for (int s = 0; s < 4; ++s) x[s] += o.x[s];
        return *this;
    }
    QuaternionElement& operator-=(const QuaternionElement& o) {
        require_same_ring(ring, o.ring);
        for (int s = 0; s < 4; ++s) x[s] -= o.x[s];
        return *this;
    }
    friend QuaternionElement operator+(QuaternionElement a, const QuaternionElement& b) { return a += b; }
    friend QuaternionElement operator-(QuaternionElement a, const QuaternionElement& b) { return a -= b; }
    friend QuaternionElement operator*(const K& s, const QuaternionElement& a) {
        QuaternionElement r(a.ring);
        for (int t = 0; t < 4; ++t) r.x[t] = s * a.x[t];
        return r;
    }
    friend bool operator==(const QuaternionElement& a, const QuaternionElement& b) {
        require_same_ring(a.ring, b.ring);
        return a.x == b.x;
    }
    friend bool operator!=(const QuaternionElement& a, const QuaternionElement& b) { return !(a == b); }

    friend QuaternionElement operator*(const QuaternionElement& a, const QuaternionElement& b) {
        require_same_ring(a.ring, b.ring);
        const QuaternionRing& R = *a.ring;
        QuaternionElement r(a.ring);
        for (int i = 0; i < 4; ++i) {
            if (scalar_is_zero(a.x[i])) continue;
            for (int j = 0; j < 4; ++j) {
                if (scalar_is_zero(b.x[j])) continue;
                K p = a.x[i] * b.x[j];
                for (int k = 0; k < 4; ++k) {
                    const Rational& t = R.table(i, j, k);
                    if (t == 0) continue;
                    r.x[k] += p * K(t);
                }
            }
        }
        return r;
    }

    K trace() const {
        K t = x[0] + x[0];
        for (int s = 1; s < 4; ++s) t += x[s] * K(ring->basis_trace(s));
        return t;
    }

    QuaternionElement conj() const {
        QuaternionElement r(ring);
        K t = trace();
        r.x[0] = t - x[0];
        for (int s = 1; s < 4; ++s) r.x[s] = -x[s];
        return r;
    }

    // n(x) = x x^*; equals (x,x)/2 through the pairing Gram.
    K norm() const {
        K n = pair(*this, *this);
        return n / K(2);
    }

    // (u,v) = tr(u v^*) = v^T G u with the integral Gram of the ring.
    friend K pair(const QuaternionElement& u, const QuaternionElement& v) {
        require_same_ring(u.ring, v.ring);
        const QuaternionRing& R = *u.ring;
        K acc(0);
        for (int s = 0; s < 4; ++s) {
            if (scalar_is_zero(u.x[s])) continue;
            for (int t = 0; t < 4; ++t) {
                const Rational& g = R.gram(s, t);
                if (g == 0) continue;
                acc += u.x[s] * v.x[t] * K(g);
            }
        }
        return acc;
    }

    // x - tr(x)/2; always trace zero.
    QuaternionElement imaginary_part() const {
        QuaternionElement r(*this);
        r.x[0] -= trace() / K(2);
        return r;
    }

    // sigma applied coordinate-wise (identity for K = Rational).
    QuaternionElement sigma_conj() const {
        QuaternionElement r(ring);
        for (int s = 0; s < 4; ++s) r.x[s] = fgsp6::sigma(x[s]);
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int s = 0; s < 4; ++s) os << (s ? " " : "") << scalar_to_string(x[s]);
        return os.str();
    }
};

using QuatQ = QuaternionElement<Rational>;
using QuatC = QuaternionElement<GaussianRational>;

}  // namespace fgsp6

#endif
