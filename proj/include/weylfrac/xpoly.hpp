#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weylfrac/rat.hpp"

namespace weylfrac {

/// Univariate polynomial in x over Rat, dense coefficient vector.
/// Trailing zero coefficients are trimmed on construction, so structural
/// equality is mathematical equality. The zero polynomial has an empty
/// coefficient vector and degree() == -1.
class XPoly {
  public:
    XPoly() = default;
    XPoly(const Rat& c) { if (!c.is_zero()) c_.push_back(c); }
    XPoly(long c) : XPoly(Rat(c)) {}
    explicit XPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static XPoly monomial(int k, const Rat& c = Rat(1));
    /// The generator x.
    static XPoly x() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^k; zero outside the stored range.
    const Rat& coeff(int k) const;
    const Rat& leading() const; // pre: nonzero

    const std::vector<Rat>& coeffs() const { return c_; }

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { a += b; return a; }
    friend XPoly operator-(XPoly a, const XPoly& b) { a -= b; return a; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const Rat& c, const XPoly& p);

    friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    /// k-th formal derivative; k = 0 returns the polynomial unchanged.
    XPoly derivative(int k = 1) const;

    /// Splits p = c * phat with phat having coprime integer coefficients and
    /// positive leading coefficient. pre: nonzero.
    std::pair<Rat, XPoly> content_primitive() const;

    /// Evaluation at a rational point (Horner). Used by tests.
    Rat eval_at(const Rat& v) const;

    std::string to_string() const;

  private:
    void trim();
    std::vector<Rat> c_;
};

/// Exact quotient p / d; throws std::domain_error if d = 0 or d does not
/// divide p. A failure signals a violated divisibility assumption upstream.
XPoly divexact(const XPoly& p, const XPoly& d);

/// Quotient and remainder of p by d over the rationals. pre: d != 0.
std::pair<XPoly, XPoly> divmod(const XPoly& p, const XPoly& d);

/// Monic gcd; gcd(0, 0) = 0.
XPoly gcd(const XPoly& a, const XPoly& b);

/// lcm normalized monic; lcm with zero is zero.
XPoly lcm(const XPoly& a, const XPoly& b);

} // namespace weylfrac
