#pragma once

#include <vector>

#include "madlie/ring.hpp"

namespace madlie {

// Dense matrix over a RingSpec ring.
class RingMatrix {
  public:
    RingMatrix() = default;
    RingMatrix(RingSpec::Ptr spec, int rows, int cols)
        : spec_(std::move(spec)), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, RingElement::zero(spec_)) {}

    static RingMatrix identity(RingSpec::Ptr spec, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const RingSpec::Ptr& spec() const { return spec_; }

    RingElement& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const RingElement& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    RingMatrix operator+(const RingMatrix& o) const;
    RingMatrix operator-(const RingMatrix& o) const;
    RingMatrix operator*(const RingMatrix& o) const;
    RingMatrix scaled(const RingElement& c) const;
    RingMatrix transpose() const;

    std::vector<RingElement> apply(const std::vector<RingElement>& v) const;

    bool operator==(const RingMatrix& o) const;
    bool operator!=(const RingMatrix& o) const { return !(*this == o); }

    bool is_zero() const;

    RingElement trace() const;

    // Laplace-expansion determinant; intended for small matrices.
    RingElement det() const;

    // Classical adjugate, so m * adjugate(m) = det(m) * I.  Small matrices.
    RingMatrix adjugate() const;

    // Addition of multiples, swaps and unit scalings of rows/columns.
    void row_swap(int i, int j);
    void col_swap(int i, int j);
    void row_addmul(int dst, int src, const RingElement& q);  // row dst += q*row src
    void col_addmul(int dst, int src, const RingElement& q);
    void row_scale(int i, const RingElement& u);
    void col_scale(int j, const RingElement& u);

  private:
    RingSpec::Ptr spec_;
    int rows_ = 0, cols_ = 0;
    std::vector<RingElement> a_;
};

// Coefficients of det(T*I - m), ascending: c[0] + c[1]T + ... + c[n]T^n,
// c[n] = 1.  Faddeev-LeVerrier, exact over any commutative Q-algebra.
std::vector<RingElement> char_poly(const RingMatrix& m);

}  // namespace madlie
