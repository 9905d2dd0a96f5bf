#include "weylfrac/comeasure.hpp"

#include <stdexcept>

#include "weylfrac/errors.hpp"

namespace weylfrac {

namespace {

// Coefficient of the unknown u_q(x) in the y^r equation when u multiplies a
// factor with y-coefficients hs: sum_p binom(q, p) * D_x^{q-p} h_{r-p},
// p ranging so that 0 <= r-p <= deg and p <= q.
XPoly unknown_coef(int q, int r, const std::vector<XPoly>& hs) {
    int deg = static_cast<int>(hs.size()) - 1;
    XPoly acc;
    int lo = r - deg > 0 ? r - deg : 0;
    int hi = q < r ? q : r;
    for (int p = lo; p <= hi; ++p)
        acc += binom(q, p) *
               hs[static_cast<size_t>(r - p)].derivative(q - p);
    return acc;
}

Rat weyl_content(const WeylPoly& f) {
    Rat c(0);
    for (const auto& [m, coef] : f.terms())
        c = Rat::gcd(c, coef);
    return c;
}

} // namespace

ComeasureSystem build_system(const WeylPoly& f, const WeylPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("build_system: zero input");
    int m = f.deg_y();
    int n = g.deg_y();
    if (m + n == 0)
        throw std::domain_error("build_system: both inputs are free of y");
    std::vector<XPoly> fs = f.y_coefficients();
    std::vector<XPoly> gs = g.y_coefficients();

    int size = m + n;
    ComeasureSystem sys{m, n, PolyMatrix(size, size), PolyVec()};
    sys.rhs_template.resize(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) {
        int r = size - 1 - i;
        for (int j = 0; j < n; ++j)
            sys.M.at(i, j) = unknown_coef(n - 1 - j, r, fs);
        for (int j = 0; j < m; ++j)
            sys.M.at(i, n + j) = -unknown_coef(m - 1 - j, r, gs);
        sys.rhs_template[static_cast<size_t>(i)] =
            fs[static_cast<size_t>(m)] * unknown_coef(m, r, gs) -
            gs[static_cast<size_t>(n)] * unknown_coef(n, r, fs);
    }
    return sys;
}

XPoly hres(const WeylPoly& f, const WeylPoly& g) {
    return det(build_system(f, g).M);
}

bool verify_pair(const WeylPoly& f, const WeylPoly& g,
                 const ComeasurePair& pair) {
    if (pair.a.is_zero() || pair.b.is_zero())
        return false;
    return mul_closed(pair.a, f) == mul_closed(pair.b, g);
}

ComeasurePair comeasure_left(const WeylPoly& f, const WeylPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("comeasure_left: zero input");
    int m = f.deg_y();
    int n = g.deg_y();

    ComeasurePair pair;
    if (m == 0 && n == 0) {
        // both in Q[x]: everything commutes
        pair = ComeasurePair{g, f};
    } else {
        ComeasureSystem sys = build_system(f, g);
        XPoly mu = det(sys.M);
        std::vector<XPoly> fs = f.y_coefficients();
        std::vector<XPoly> gs = g.y_coefficients();
        std::vector<XPoly> a_coefs(static_cast<size_t>(n) + 1);
        std::vector<XPoly> b_coefs(static_cast<size_t>(m) + 1);
        if (!mu.is_zero()) {
            // phi = mu makes the unique solution polynomial (Cramer: every
            // rhs entry carries the factor phi)
            PolyVec rhs(sys.rhs_template.size());
            for (size_t i = 0; i < rhs.size(); ++i)
                rhs[i] = sys.rhs_template[i] * mu;
            PolyVec sol = solve(sys.M, rhs);
            a_coefs[static_cast<size_t>(n)] = gs[static_cast<size_t>(n)] * mu;
            b_coefs[static_cast<size_t>(m)] = fs[static_cast<size_t>(m)] * mu;
            for (int j = 0; j < n; ++j)
                a_coefs[static_cast<size_t>(n - 1 - j)] =
                    sol[static_cast<size_t>(j)];
            for (int j = 0; j < m; ++j)
                b_coefs[static_cast<size_t>(m - 1 - j)] =
                    sol[static_cast<size_t>(n + j)];
        } else {
            // phi = 0 zeroes the right-hand sides and the leading
            // coefficients; any primitive kernel vector works
            PolyVec k = nullspace_vector(sys.M);
            for (int j = 0; j < n; ++j)
                a_coefs[static_cast<size_t>(n - 1 - j)] =
                    k[static_cast<size_t>(j)];
            for (int j = 0; j < m; ++j)
                b_coefs[static_cast<size_t>(m - 1 - j)] =
                    k[static_cast<size_t>(n + j)];
        }
        pair = ComeasurePair{WeylPoly::from_y_coefficients(a_coefs),
                             WeylPoly::from_y_coefficients(b_coefs)};
    }

    if (pair.a.is_zero() || pair.b.is_zero())
        throw internal_error("comeasure_left: zero factor produced");

    // joint scalar normalization keeps coefficients small across chained
    // calls; the pair stays valid under common scaling
    Rat content = Rat::gcd(weyl_content(pair.a), weyl_content(pair.b));
    if (!content.is_one()) {
        Rat inv = Rat(1) / content;
        pair.a = scale(pair.a, inv);
        pair.b = scale(pair.b, inv);
    }

    if (mul_closed(pair.a, f) != mul_closed(pair.b, g))
        throw internal_error("comeasure_left: verification failed");
    return pair;
}

} // namespace weylfrac
