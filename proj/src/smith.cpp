#include "madlie/smith.hpp"

namespace madlie {

namespace {

void require_univariate_laurent(const RingSpec& spec) {
    if (spec.kind() != RingKind::laurent || spec.nvars() != 1)
        throw InputError("Smith normal form needs a univariate laurent ring, got " + spec.describe());
}

int min_degree(const RingElement& e) { return e.terms().back().m.e[0]; }
int max_degree(const RingElement& e) { return e.terms().front().m.e[0]; }

// Width of the support; the Euclidean function for Q[t, t^-1].
int width(const RingElement& e) { return max_degree(e) - min_degree(e); }

// Dense coefficient vector of a polynomial part shifted to degree 0.
std::vector<Rational> dense_coeffs(const RingElement& e, int shift) {
    std::vector<Rational> c(width(e) + 1, Rational(0));
    for (const auto& t : e.terms()) c[t.m.e[0] - shift] = t.c;
    return c;
}

RingElement from_dense(const RingSpec::Ptr& spec, const std::vector<Rational>& c, int shift) {
    std::vector<Term> t;
    for (int i = 0; i < int(c.size()); ++i) {
        if (c[i] == 0) continue;
        Mono m;
        m.e[0] = static_cast<int16_t>(i + shift);
        t.push_back(Term{m, c[i]});
    }
    return RingElement::from_terms(spec, std::move(t));
}

// a = q*b + r with r = 0 or width(r) < width(b).
struct EuclidResult {
    RingElement q, r;
};

EuclidResult euclid_div(const RingElement& a, const RingElement& b) {
    const auto& spec = a.spec();
    if (b.is_zero()) throw InternalError("euclidean division by zero");
    if (a.is_zero()) return {RingElement::zero(spec), RingElement::zero(spec)};
    const int sa = min_degree(a), sb = min_degree(b);
    std::vector<Rational> A = dense_coeffs(a, sa), B = dense_coeffs(b, sb);
    // Plain polynomial division of A by B.
    std::vector<Rational> Q(A.size() >= B.size() ? A.size() - B.size() + 1 : 0, Rational(0));
    std::vector<Rational> R = A;
    const Rational lc = B.back();
    for (int d = int(R.size()) - int(B.size()); d >= 0; --d) {
        Rational f = R[d + B.size() - 1] / lc;
        if (f == 0) continue;
        Q[d] = f;
        for (std::size_t i = 0; i < B.size(); ++i) R[d + i] -= f * B[i];
    }
    while (!R.empty() && R.back() == 0) R.pop_back();
    RingElement q = from_dense(spec, Q, sa - sb);
    RingElement r = from_dense(spec, R, sa);
    return {std::move(q), std::move(r)};
}

bool divides_exactly(const RingElement& d, const RingElement& e) {
    if (e.is_zero()) return true;
    return euclid_div(e, d).r.is_zero();
}

}  // namespace

bool laurent_is_unit(const RingElement& e) {
    return !e.is_zero() && e.terms().size() == 1;
}

RingElement laurent_unit_inverse(const RingElement& e) {
    if (!laurent_is_unit(e)) throw InternalError("laurent_unit_inverse of a non-unit");
    Mono m;
    m.e[0] = static_cast<int16_t>(-e.terms()[0].m.e[0]);
    return RingElement::monomial(e.spec(), m, Rational(1) / e.terms()[0].c);
}

SmithResult smith_normal_form(const RingMatrix& m) {
    require_univariate_laurent(*m.spec());
    const auto& spec = m.spec();
    const int rows = m.rows(), cols = m.cols();
    SmithResult res{RingMatrix::identity(spec, rows), m, RingMatrix::identity(spec, cols)};
    RingMatrix& D = res.D;
    RingMatrix& U = res.U;
    RingMatrix& V = res.V;

    const int nmin = std::min(rows, cols);
    for (int p = 0; p < nmin; ++p) {
        // Pivot: minimal-width nonzero entry of the trailing submatrix.
        int pr = -1, pc = -1, best = -1;
        for (int i = p; i < rows; ++i)
            for (int j = p; j < cols; ++j) {
                if (D.at(i, j).is_zero()) continue;
                int w = width(D.at(i, j));
                if (best < 0 || w < best) { best = w; pr = i; pc = j; }
            }
        if (pr < 0) break;  // submatrix is zero
        if (pr != p) { D.row_swap(pr, p); U.row_swap(pr, p); }
        if (pc != p) { D.col_swap(pc, p); V.col_swap(pc, p); }

        for (int guard = 0;; ++guard) {
            if (guard > 1000) throw InternalError("Smith reduction did not converge");
            // Clear column p below the pivot.
            bool changed = false;
            for (int i = p + 1; i < rows; ++i) {
                if (D.at(i, p).is_zero()) continue;
                auto [q, r] = euclid_div(D.at(i, p), D.at(p, p));
                D.row_addmul(i, p, -q);
                U.row_addmul(i, p, -q);
                if (!D.at(i, p).is_zero()) {
                    // Remainder is strictly smaller: swap it into the pivot.
                    D.row_swap(i, p);
                    U.row_swap(i, p);
                    changed = true;
                }
            }
            if (changed) continue;
            // Clear row p.
            for (int j = p + 1; j < cols; ++j) {
                if (D.at(p, j).is_zero()) continue;
                auto [q, r] = euclid_div(D.at(p, j), D.at(p, p));
                D.col_addmul(j, p, -q);
                V.col_addmul(j, p, -q);
                if (!D.at(p, j).is_zero()) {
                    D.col_swap(j, p);
                    V.col_swap(j, p);
                    changed = true;
                }
            }
            if (changed) continue;
            // Divisibility of the remaining block by the pivot.
            bool fixed = true;
            for (int i = p + 1; i < rows && fixed; ++i)
                for (int j = p + 1; j < cols && fixed; ++j) {
                    if (divides_exactly(D.at(p, p), D.at(i, j))) continue;
                    D.row_addmul(p, i, RingElement::one(spec));
                    U.row_addmul(p, i, RingElement::one(spec));
                    fixed = false;
                }
            if (fixed) break;
        }
    }
    // Normalize diagonal entries: lowest term scaled to 1.
    for (int p = 0; p < nmin; ++p) {
        const RingElement& d = D.at(p, p);
        if (d.is_zero()) continue;
        Mono low = d.terms().back().m;
        Rational lc = d.terms().back().c;
        Mono invm;
        invm.e[0] = static_cast<int16_t>(-low.e[0]);
        RingElement u = RingElement::monomial(spec, invm, Rational(1) / lc);
        D.row_scale(p, u);
        U.row_scale(p, u);
    }
    return res;
}

}  // namespace madlie
