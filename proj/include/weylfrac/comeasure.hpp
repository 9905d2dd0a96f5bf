#pragma once

#include "weylfrac/polymat.hpp"
#include "weylfrac/weyl.hpp"

namespace weylfrac {

/// Linear system whose solution yields left-comeasuring factors for a pair
/// (f, g): rows are the y^r coefficients of a*f - b*g for r = n+m-1 down
/// to 0, columns are the unknowns a_{n-1},...,a_0,b_{m-1},...,b_0 (the
/// b-columns carry the sign from moving b*g across the equality). The
/// right-hand side is rhs_template * phi, with the leading coefficients
/// fixed as a_n = g_n * phi and b_m = f_m * phi.
struct ComeasureSystem {
    int m = 0; ///< deg_y f
    int n = 0; ///< deg_y g
    PolyMatrix M;
    PolyVec rhs_template;
};

/// Witness pair for left comeasurability: a*f = b*g with both factors
/// nonzero, deg_y(a) <= deg_y(g), deg_y(b) <= deg_y(f).
struct ComeasurePair {
    WeylPoly a;
    WeylPoly b;
};

/// Builds the comeasuring system for nonzero f, g with deg_y f + deg_y g
/// >= 1 (the purely commutative case is short-circuited in comeasure_left).
ComeasureSystem build_system(const WeylPoly& f, const WeylPoly& g);

/// Noncommutative resultant of f and g with respect to y: det of the
/// comeasuring system matrix. Canonical only up to the row/column ordering
/// convention above, hence up to sign.
XPoly hres(const WeylPoly& f, const WeylPoly& g);

/// Constructs a left-comeasuring pair for arbitrary nonzero f, g. When
/// both are free of y the pair (g, f) commutes; when hres != 0 the system
/// is solved with phi = hres; when hres = 0 a primitive kernel vector is
/// used with phi = 0. The identity a*f = b*g is re-verified with
/// mul_closed before returning; failure throws internal_error.
ComeasurePair comeasure_left(const WeylPoly& f, const WeylPoly& g);

/// True iff pair.a * f = pair.b * g with both factors nonzero.
bool verify_pair(const WeylPoly& f, const WeylPoly& g,
                 const ComeasurePair& pair);

} // namespace weylfrac
