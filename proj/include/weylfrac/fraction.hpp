#pragma once

#include "weylfrac/weyl.hpp"

namespace weylfrac {

/// Left fraction den^{-1} ∘ num over H(x,y). The denominator is always
/// nonzero. There is no canonical representative: two fractions denote the
/// same element of the rational extension iff `equivalent` says so;
/// structural equality of the parts is sufficient but not necessary.
class Fraction {
  public:
    /// den^{-1} ∘ num; throws std::domain_error when den = 0.
    Fraction(WeylPoly den, WeylPoly num);

    const WeylPoly& den() const { return den_; }
    const WeylPoly& num() const { return num_; }

  private:
    WeylPoly den_;
    WeylPoly num_;
};

/// f as the fraction 1^{-1} ∘ f.
Fraction embed(const WeylPoly& f);

/// True iff the numerator is zero; all such fractions form the zero class
/// and no fraction with nonzero numerator joins it.
bool is_zero(const Fraction& z);

/// Decides equivalence: with (u, v) such that u*den1 = v*den2 != 0 (from
/// comeasure_left, short-circuited when a denominator is 1 or the
/// denominators coincide), the classes match iff u*num1 = v*num2.
bool equivalent(const Fraction& z1, const Fraction& z2);

/// Sum over a common left denominator; well-defined up to equivalence.
Fraction add(const Fraction& z1, const Fraction& z2);

Fraction neg(const Fraction& z);
Fraction sub(const Fraction& z1, const Fraction& z2);
Fraction scalar_mul(const Fraction& z, const Rat& c);

/// Product: zero when z1's numerator is zero; b^{-1}∘(a*c) when z2 has unit
/// denominator; otherwise (v*d*b)^{-1} ∘ (u*c) with u*d = v*(d*a) obtained
/// from comeasure_left. Well-defined up to equivalence.
Fraction mul(const Fraction& z1, const Fraction& z2);

/// num^{-1} ∘ den; requires a nonzero numerator.
Fraction inverse(const Fraction& z);

} // namespace weylfrac
