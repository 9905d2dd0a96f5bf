#pragma once

#include <vector>

#include "weylfrac/xpoly.hpp"

namespace weylfrac {

using PolyVec = std::vector<XPoly>;

/// Dense row-major matrix over Q[x].
class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
    PolyMatrix(int rows, int cols, std::vector<XPoly> entries);

    static PolyMatrix from_rows(const std::vector<std::vector<XPoly>>& rows);
    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    XPoly& at(int i, int j) { return e_[idx(i, j)]; }
    const XPoly& at(int i, int j) const { return e_[idx(i, j)]; }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

  private:
    size_t idx(int i, int j) const;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<XPoly> e_;
};

PolyVec mat_vec(const PolyMatrix& m, const PolyVec& v);
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination with
/// lowest-degree pivoting; det of the 0x0 matrix is 1. Throws on
/// non-square input.
XPoly det(const PolyMatrix& m);

/// Solves M s = rhs for square nonsingular M whose exact solution over the
/// rational-function field has polynomial entries. The elimination runs
/// fraction-free, back-substitution runs over reduced rational functions,
/// and polynomiality of every entry is certified with divexact. Throws
/// std::domain_error on a singular matrix or a non-polynomial solution.
PolyVec solve(const PolyMatrix& m, const PolyVec& rhs);

/// A nonzero kernel vector of a square singular matrix: the first free
/// column is set to 1, pivot entries are back-substituted, denominators are
/// cleared by their lcm and the joint content divided out; the sign makes
/// the first nonzero entry's leading coefficient positive. Throws
/// std::domain_error if det(m) != 0.
PolyVec nullspace_vector(const PolyMatrix& m);

} // namespace weylfrac
