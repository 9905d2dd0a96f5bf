#include "weylfrac/polymat.hpp"

#include <stdexcept>
#include <utility>

namespace weylfrac {

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<XPoly> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows_ < 0 || cols_ < 0 ||
        e_.size() != static_cast<size_t>(rows_) * static_cast<size_t>(cols_))
        throw std::invalid_argument("PolyMatrix: entry count mismatch");
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<XPoly>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    std::vector<XPoly> flat;
    flat.reserve(static_cast<size_t>(r) * static_cast<size_t>(c));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw std::invalid_argument("PolyMatrix: ragged rows");
        for (const auto& e : row)
            flat.push_back(e);
    }
    return PolyMatrix(r, c, std::move(flat));
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = XPoly(1);
    return m;
}

size_t PolyMatrix::idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("PolyMatrix: index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) +
           static_cast<size_t>(j);
}

PolyVec mat_vec(const PolyMatrix& m, const PolyVec& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw std::invalid_argument("mat_vec: size mismatch");
    PolyVec out(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out[static_cast<size_t>(i)] += m.at(i, j) * v[static_cast<size_t>(j)];
    return out;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: size mismatch");
    PolyMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

namespace {

// Reduced rational function over Q[x]; denominator kept monic.
struct RatFunc {
    XPoly num;
    XPoly den{XPoly(1)};

    static RatFunc of(XPoly n, XPoly d) {
        if (d.is_zero())
            throw std::domain_error("RatFunc: zero denominator");
        RatFunc f{std::move(n), std::move(d)};
        f.reduce();
        return f;
    }

    void reduce() {
        if (num.is_zero()) {
            den = XPoly(1);
            return;
        }
        XPoly g = gcd(num, den);
        if (g.degree() > 0) {
            num = divexact(num, g);
            den = divexact(den, g);
        }
        Rat lead = den.leading();
        if (!lead.is_one()) {
            Rat inv = Rat(1) / lead;
            num = inv * num;
            den = inv * den;
        }
    }

    bool is_zero() const { return num.is_zero(); }
};

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc::of(a.num * b.num, a.den * b.den);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc::of(a.num * b.den - b.num * a.den, a.den * b.den);
}

RatFunc div(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero())
        throw std::domain_error("RatFunc: division by zero");
    return RatFunc::of(a.num * b.den, a.den * b.num);
}

// Fraction-free row echelon form. Pivot columns are limited to the first
// `pivot_cols` columns (the rest ride along, e.g. an augmented rhs);
// within a column the lowest-degree nonzero entry wins, ties by row index.
struct Echelon {
    PolyMatrix r;
    std::vector<std::pair<int, int>> pivots; // (row, col)
    int sign = 1;
};

Echelon echelon_form(PolyMatrix work, int pivot_cols) {
    Echelon e{std::move(work), {}, 1};
    PolyMatrix& r = e.r;
    XPoly prev(1);
    int row = 0;
    for (int col = 0; col < pivot_cols && row < r.rows(); ++col) {
        int best = -1;
        for (int i = row; i < r.rows(); ++i) {
            if (r.at(i, col).is_zero())
                continue;
            if (best < 0 || r.at(i, col).degree() < r.at(best, col).degree())
                best = i;
        }
        if (best < 0)
            continue; // free column
        if (best != row) {
            for (int j = 0; j < r.cols(); ++j)
                std::swap(r.at(best, j), r.at(row, j));
            e.sign = -e.sign;
        }
        for (int i = row + 1; i < r.rows(); ++i) {
            for (int j = col + 1; j < r.cols(); ++j)
                r.at(i, j) = divexact(
                    r.at(row, col) * r.at(i, j) - r.at(i, col) * r.at(row, j),
                    prev);
            r.at(i, col) = XPoly{};
        }
        prev = r.at(row, col);
        e.pivots.emplace_back(row, col);
        ++row;
    }
    return e;
}

} // namespace

XPoly det(const PolyMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("det: non-square matrix");
    int n = m.rows();
    if (n == 0)
        return XPoly(1); // empty product
    Echelon e = echelon_form(m, n);
    if (static_cast<int>(e.pivots.size()) < n)
        return XPoly{};
    XPoly d = e.r.at(n - 1, n - 1);
    return e.sign < 0 ? -d : d;
}

PolyVec solve(const PolyMatrix& m, const PolyVec& rhs) {
    if (!m.is_square())
        throw std::invalid_argument("solve: non-square matrix");
    int n = m.rows();
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("solve: rhs size mismatch");
    if (n == 0)
        return {};
    PolyMatrix aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n) = rhs[static_cast<size_t>(i)];
    }
    Echelon e = echelon_form(std::move(aug), n);
    if (static_cast<int>(e.pivots.size()) < n)
        throw std::domain_error("solve: singular matrix");

    std::vector<RatFunc> x(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        RatFunc acc = RatFunc::of(e.r.at(i, n), XPoly(1));
        for (int j = i + 1; j < n; ++j)
            acc = acc - RatFunc::of(e.r.at(i, j), XPoly(1)) *
                            x[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] =
            div(acc, RatFunc::of(e.r.at(i, i), XPoly(1)));
    }

    PolyVec out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const RatFunc& f = x[static_cast<size_t>(i)];
        // certifies the Cramer-style divisibility assumption
        out[static_cast<size_t>(i)] = divexact(f.num, f.den);
    }
    return out;
}

PolyVec nullspace_vector(const PolyMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("nullspace_vector: non-square matrix");
    int n = m.rows();
    if (n == 0)
        throw std::domain_error("nullspace_vector: empty matrix is nonsingular");
    Echelon e = echelon_form(m, n);
    if (static_cast<int>(e.pivots.size()) == n)
        throw std::domain_error("nullspace_vector: matrix is nonsingular");

    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (auto [r, c] : e.pivots)
        is_pivot[static_cast<size_t>(c)] = true;
    int free_col = 0;
    while (is_pivot[static_cast<size_t>(free_col)])
        ++free_col;

    std::vector<RatFunc> v(static_cast<size_t>(n));
    v[static_cast<size_t>(free_col)] = RatFunc::of(XPoly(1), XPoly(1));
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
        auto [row, col] = *it;
        RatFunc acc;
        for (int j = col + 1; j < n; ++j)
            if (!v[static_cast<size_t>(j)].is_zero() &&
                !e.r.at(row, j).is_zero())
                acc = acc - RatFunc::of(e.r.at(row, j), XPoly(1)) *
                                v[static_cast<size_t>(j)];
        v[static_cast<size_t>(col)] =
            div(acc, RatFunc::of(e.r.at(row, col), XPoly(1)));
    }

    XPoly common_den(1);
    for (const auto& f : v)
        common_den = lcm(common_den, f.den);
    PolyVec out(static_cast<size_t>(n));
    Rat content(0);
    for (int i = 0; i < n; ++i) {
        const RatFunc& f = v[static_cast<size_t>(i)];
        if (f.is_zero())
            continue;
        out[static_cast<size_t>(i)] = f.num * divexact(common_den, f.den);
        content = Rat::gcd(content,
                           out[static_cast<size_t>(i)].content_primitive().first);
    }
    int first_nonzero = -1;
    for (int i = 0; i < n && first_nonzero < 0; ++i)
        if (!out[static_cast<size_t>(i)].is_zero())
            first_nonzero = i;
    if (first_nonzero < 0)
        throw std::domain_error("nullspace_vector: produced zero vector");
    if (out[static_cast<size_t>(first_nonzero)].leading().sign() < 0)
        content = -content;
    Rat inv = Rat(1) / content;
    for (auto& p : out)
        p = inv * p;
    return out;
}

} // namespace weylfrac
