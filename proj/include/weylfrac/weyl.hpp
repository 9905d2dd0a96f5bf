#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "weylfrac/rat.hpp"
#include "weylfrac/xpoly.hpp"

namespace weylfrac {

/// One generator of H(x,y).
enum class Gen : char { X = 'x', Y = 'y' };

/// An unordered word over the generators; may be empty (the unit monomial).
using Word = std::vector<Gen>;

/// Parses a word from letters 'x' and 'y', e.g. "yyxx".
Word word_from_string(std::string_view s);

/// Exponent pair of a normal-ordered monomial x^xp * y^yp.
struct Mono {
    int xp = 0;
    int yp = 0;
    friend bool operator==(const Mono&, const Mono&) = default;
};

/// Graded-lex descending, x before y: higher total degree first, ties broken
/// by higher x power. This is the canonical term order for rendering, so the
/// term map iterates in display order.
struct MonoOrder {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = a.xp + a.yp, db = b.xp + b.yp;
        if (da != db)
            return da > db;
        return a.xp > b.xp;
    }
};

/// Element of the Heisenberg algebra H(x,y) in normal order: a finite sum
/// sum f_{pq} x^p y^q with every x to the left of every y. No zero
/// coefficients are stored; the zero element has an empty term map.
class WeylPoly {
  public:
    using TermMap = std::map<Mono, Rat, MonoOrder>;

    WeylPoly() = default;
    WeylPoly(const Rat& c) { add_term(0, 0, c); }
    WeylPoly(long c) : WeylPoly(Rat(c)) {}

    static WeylPoly monomial(int xp, int yp, const Rat& c = Rat(1));
    static WeylPoly gen_x() { return monomial(1, 0); }
    static WeylPoly gen_y() { return monomial(0, 1); }
    /// f(x) as an element with no y entry.
    static WeylPoly from_xpoly(const XPoly& p);
    /// Reassembles sum coeffs[q](x) * y^q.
    static WeylPoly from_y_coefficients(const std::vector<XPoly>& coeffs);

    bool is_zero() const { return terms_.empty(); }
    /// True iff the element is a nonzero scalar (Theorem 2.2 predicate).
    bool is_invertible() const;
    bool is_one() const;

    const TermMap& terms() const { return terms_; }
    const Rat& coeff(int xp, int yp) const;

    /// Degrees; -1 for the zero element.
    int deg_y() const;
    int deg_x() const;

    /// f_m(x) for m = deg_y. pre: nonzero.
    XPoly leading_ycoef() const;

    /// The view f = sum f_q(x) y^q as a vector indexed by q; empty for zero,
    /// last entry nonzero otherwise.
    std::vector<XPoly> y_coefficients() const;

    WeylPoly operator-() const;
    WeylPoly& operator+=(const WeylPoly& o);
    WeylPoly& operator-=(const WeylPoly& o);
    friend WeylPoly operator+(WeylPoly a, const WeylPoly& b) { a += b; return a; }
    friend WeylPoly operator-(WeylPoly a, const WeylPoly& b) { a -= b; return a; }

    friend bool operator==(const WeylPoly& a, const WeylPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const WeylPoly& a, const WeylPoly& b) {
        return !(a == b);
    }

    /// Adds c * x^xp * y^yp, dropping the term if the sum cancels.
    void add_term(int xp, int yp, const Rat& c);

  private:
    TermMap terms_;
};

WeylPoly scale(const WeylPoly& f, const Rat& c);

/// Formal partial derivatives of the normal-ordered polynomial.
WeylPoly dx(const WeylPoly& f);
WeylPoly dy(const WeylPoly& f);

/// Binomial coefficient k!/(alpha!(k-alpha)!); requires 0 <= alpha <= k.
Rat binom(int k, int alpha);

/// Coefficient q!r!/((q-alpha)! alpha! (r-alpha)!) in the expansion of
/// y^q x^r; requires 0 <= alpha <= min(q, r).
Rat c_qr(int q, int r, int alpha);

/// Normal-ordered expansion of a word by repeated application of the
/// rewrite rule yx -> xy + 1. Exponential in the worst case; retained as
/// the root oracle for both multiplication engines.
WeylPoly normal_order(const Word& w);

/// Product via termwise expansion of y^q x^r (closed coefficient formula).
WeylPoly mul_rewrite(const WeylPoly& f, const WeylPoly& g);

/// Product via sum_alpha D_y^alpha f * D_x^alpha g / alpha! with commutative
/// multiplication; the sum stops when either derivative vanishes. This is
/// the default engine.
WeylPoly mul_closed(const WeylPoly& f, const WeylPoly& g);

/// f*g - g*f, computed with mul_closed.
WeylPoly commutator(const WeylPoly& f, const WeylPoly& g);

/// k-fold product via mul_closed; pow(f, 0) = 1.
WeylPoly pow(const WeylPoly& f, int k);

/// Product in the commutative ring Q[x,y], ignoring the algebra relation.
/// Building block of mul_closed; also used by tests.
WeylPoly mul_commutative(const WeylPoly& f, const WeylPoly& g);

} // namespace weylfrac
