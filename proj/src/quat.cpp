#include "fgsp6/quat.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

#include "fgsp6/verify_cache.hpp"

namespace fgsp6 {
namespace {

// Element of the Clifford algebra C((N, q_T)) as coefficients on the eight
// canonical monomials e_S, S an ascending subset of {1,2,3} (bitmask, bit
// i-1 for e_i).  Words reduce through e_i^2 = q(e_i) and
// e_i e_j + e_j e_i = B(e_i, e_j) for i != j.
struct CliffordElt {
    std::array<Rational, 8> c{};
};

struct CliffordCtx {
    Rational q[4];       // q[1..3] = a, b, c
    Rational bil[4][4];  // bil[i][j] = B(e_i, e_j), i != j

    explicit CliffordCtx(const TernaryForm& t) {
        q[1] = Rational(t.a);
        q[2] = Rational(t.b);
        q[3] = Rational(t.c);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) bil[i][j] = 0;
        bil[2][3] = bil[3][2] = Rational(t.d);
        bil[1][3] = bil[3][1] = Rational(t.e);
        bil[1][2] = bil[2][1] = Rational(t.f);
    }

    void add_word(CliffordElt& out, Rational coeff, std::vector<int> word) const {
        // straighten the word to ascending order
        for (std::size_t p = 0; p + 1 < word.size();) {
            if (word[p] == word[p + 1]) {
                coeff *= q[word[p]];
                word.erase(word.begin() + p, word.begin() + p + 2);
                p = p > 0 ? p - 1 : 0;
            } else if (word[p] > word[p + 1]) {
                std::vector<int> shorter(word);
                shorter.erase(shorter.begin() + p, shorter.begin() + p + 2);
                add_word(out, coeff * bil[word[p]][word[p + 1]], std::move(shorter));
                std::swap(word[p], word[p + 1]);
                coeff = -coeff;
                p = p > 0 ? p - 1 : 0;
            } else {
                ++p;
            }
        }
        int mask = 0;
        for (int i : word) mask |= 1 << (i - 1);
        out.c[mask] += coeff;
    }

    CliffordElt mul(const CliffordElt& x, const CliffordElt& y) const {
        CliffordElt r;
        for (int ma = 0; ma < 8; ++ma) {
            if (x.c[ma] == 0) continue;
            for (int mb = 0; mb < 8; ++mb) {
                if (y.c[mb] == 0) continue;
                std::vector<int> word;
                for (int i = 1; i <= 3; ++i)
                    if (ma & (1 << (i - 1))) word.push_back(i);
                for (int i = 1; i <= 3; ++i)
                    if (mb & (1 << (i - 1))) word.push_back(i);
                add_word(r, x.c[ma] * y.c[mb], std::move(word));
            }
        }
        return r;
    }

    // main anti-involution: reverse each monomial word
    CliffordElt star(const CliffordElt& x) const {
        CliffordElt r;
        for (int m = 0; m < 8; ++m) {
            if (x.c[m] == 0) continue;
            std::vector<int> word;
            for (int i = 3; i >= 1; --i)
                if (m & (1 << (i - 1))) word.push_back(i);
            add_word(r, x.c[m], std::move(word));
        }
        return r;
    }
};

// coordinates of an even element on {1, v1, v2, v3};
// v1 = e2e3, v2 = e3e1 = B(e1,e3) - e1e3, v3 = e1e2
std::array<Rational, 4> even_coords(const CliffordElt& x, const CliffordCtx& ctx) {
    for (int m : {1, 2, 4, 7})
        if (x.c[m] != 0) throw std::logic_error("odd component in even Clifford element");
    std::array<Rational, 4> out;
    const Rational& g13 = x.c[0b101];  // e1e3 coefficient
    out[0] = x.c[0] + g13 * ctx.bil[1][3];
    out[1] = x.c[0b110];
    out[2] = -g13;
    out[3] = x.c[0b011];
    return out;
}

}  // namespace

QuaternionRing::~QuaternionRing() = default;

std::shared_ptr<const QuaternionRing> QuaternionRing::from_form(const TernaryForm& form) {
    auto ring = std::shared_ptr<QuaternionRing>(new QuaternionRing());
    ring->form_ = form;

    CliffordCtx ctx(form);
    std::array<CliffordElt, 4> basis;
    basis[0].c[0] = 1;
    ctx.add_word(basis[1], 1, {2, 3});
    ctx.add_word(basis[2], 1, {3, 1});
    ctx.add_word(basis[3], 1, {1, 2});

    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto prod = even_coords(ctx.mul(basis[i], basis[j]), ctx);
            for (int k = 0; k < 4; ++k) ring->tab_[i][j][k] = prod[k];
        }

    std::array<CliffordElt, 4> stars;
    for (int s = 0; s < 4; ++s) {
        stars[s] = ctx.star(basis[s]);
        CliffordElt tr = basis[s];
        for (int m = 0; m < 8; ++m) tr.c[m] += stars[s].c[m];
        auto tc = even_coords(tr, ctx);
        if (tc[1] != 0 || tc[2] != 0 || tc[3] != 0)
            throw std::logic_error("basis trace not scalar");
        ring->trace_[s] = tc[0];
    }
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) {
            auto pc = even_coords(ctx.mul(basis[s], stars[t]), ctx);
            // tr(x) = 2 x0 + sum_k tr(v_k) x_k
            ring->gram_[s][t] = 2 * pc[0];
            for (int k = 1; k < 4; ++k) ring->gram_[s][t] += ring->trace_[k] * pc[k];
        }

    // good-basis law: v2v3 = a v1^*, v3v1 = b v2^*, v1v2 = c v3^*,
    // n(v1) = bc, n(v2) = ca, n(v3) = ab, traces (d, e, f)
    auto star_coords = [&](int s) {
        std::array<Rational, 4> r{ring->trace_[s], 0, 0, 0};
        if (s > 0) r[s] -= 1;
        else r[0] -= 1;
        return r;  // tr(v_s) - v_s
    };
    const Rational abc[3] = {Rational(form.a), Rational(form.b), Rational(form.c)};
    for (int s = 0; s < 3; ++s) {
        int i = 1 + (s + 1) % 3, j = 1 + (s + 2) % 3;  // v_{s+2} v_{s+3} pattern
        auto expect = star_coords(s + 1);
        for (int k = 0; k < 4; ++k)
            if (ring->tab_[i][j][k] != abc[s] * expect[k])
                throw std::logic_error("Clifford table violates good-basis law");
    }
    if (ring->trace_[1] != Rational(form.d) || ring->trace_[2] != Rational(form.e) ||
        ring->trace_[3] != Rational(form.f))
        throw std::logic_error("basis traces disagree with form");
    if (ring->gram_[1][1] != 2 * Rational(form.b) * Rational(form.c) ||
        ring->gram_[2][2] != 2 * Rational(form.c) * Rational(form.a) ||
        ring->gram_[3][3] != 2 * Rational(form.a) * Rational(form.b))
        throw std::logic_error("basis norms disagree with form");

    ring->fits_i64_ = true;
    auto to64 = [&](const Rational& q, std::int64_t& out) {
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
            ring->fits_i64_ = false;
            out = 0;
        } else {
            out = q.get_num().get_si();
        }
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            to64(ring->gram_[i][j], ring->gram64_[i][j]);
            for (int k = 0; k < 4; ++k) to64(ring->tab_[i][j][k], ring->tab64_[i][j][k]);
        }

    return ring;
}

QuaternionRing::VerifyCache& QuaternionRing::verify_cache() const {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (!vcache_) vcache_ = std::make_unique<VerifyCache>(*this);
    return *vcache_;
}

}  // namespace fgsp6
