#include "madlie/matrix.hpp"

namespace madlie {

RingMatrix RingMatrix::identity(RingSpec::Ptr spec, int n) {
    RingMatrix m(spec, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RingElement::one(spec);
    return m;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix shape mismatch in +");
    RingMatrix r(spec_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix shape mismatch in -");
    RingMatrix r(spec_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    if (cols_ != o.rows_) throw InternalError("matrix shape mismatch in *");
    RingMatrix r(spec_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const RingElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const RingElement& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

RingMatrix RingMatrix::scaled(const RingElement& c) const {
    RingMatrix r(spec_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix r(spec_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<RingElement> RingMatrix::apply(const std::vector<RingElement>& v) const {
    if (int(v.size()) != cols_) throw InternalError("vector length mismatch in apply");
    std::vector<RingElement> r(rows_, RingElement::zero(spec_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    return r;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool RingMatrix::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

RingElement RingMatrix::trace() const {
    if (rows_ != cols_) throw InternalError("trace of nonsquare matrix");
    RingElement t = RingElement::zero(spec_);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

RingElement RingMatrix::det() const {
    if (rows_ != cols_) throw InternalError("det of nonsquare matrix");
    const int n = rows_;
    if (n == 0) return RingElement::one(spec_);
    if (n == 1) return at(0, 0);
    RingElement d = RingElement::zero(spec_);
    for (int j = 0; j < n; ++j) {
        if (at(0, j).is_zero()) continue;
        RingMatrix minor(spec_, n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = at(r, c);
            }
        }
        RingElement term = at(0, j) * minor.det();
        d = (j % 2 == 0) ? d + term : d - term;
    }
    return d;
}

RingMatrix RingMatrix::adjugate() const {
    if (rows_ != cols_) throw InternalError("adjugate of nonsquare matrix");
    const int n = rows_;
    RingMatrix adj(spec_, n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj.at(0, 0) = RingElement::one(spec_);
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RingMatrix minor(spec_, n - 1, n - 1);
            int rr = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc++) = at(r, c);
                }
                ++rr;
            }
            RingElement cof = minor.det();
            if ((i + j) % 2) cof = -cof;
            adj.at(j, i) = cof;  // transpose of cofactors
        }
    return adj;
}

void RingMatrix::row_swap(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}
void RingMatrix::col_swap(int i, int j) {
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}
void RingMatrix::row_addmul(int dst, int src, const RingElement& q) {
    for (int c = 0; c < cols_; ++c)
        if (!at(src, c).is_zero()) at(dst, c) += q * at(src, c);
}
void RingMatrix::col_addmul(int dst, int src, const RingElement& q) {
    for (int r = 0; r < rows_; ++r)
        if (!at(r, src).is_zero()) at(r, dst) += q * at(r, src);
}
void RingMatrix::row_scale(int i, const RingElement& u) {
    for (int c = 0; c < cols_; ++c) at(i, c) = at(i, c) * u;
}
void RingMatrix::col_scale(int j, const RingElement& u) {
    for (int r = 0; r < rows_; ++r) at(r, j) = at(r, j) * u;
}

std::vector<RingElement> char_poly(const RingMatrix& m) {
    if (m.rows() != m.cols()) throw InternalError("char_poly of nonsquare matrix");
    const int n = m.rows();
    const auto& spec = m.spec();
    // Faddeev-LeVerrier: M_1 = m, c_{n-k} = -tr(m M_{k-1})/k ... with
    // M_k = m M_{k-1} + c_{n-k+1} I.
    std::vector<RingElement> c(n + 1, RingElement::zero(spec));
    c[n] = RingElement::one(spec);
    RingMatrix M = RingMatrix::identity(spec, n);
    for (int k = 1; k <= n; ++k) {
        M = m * M;
        RingElement t = M.trace();
        c[n - k] = t.scaled(Rational(-1, k));
        if (k < n)
            for (int i = 0; i < n; ++i) M.at(i, i) += c[n - k];
    }
    return c;
}

}  // namespace madlie
