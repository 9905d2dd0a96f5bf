#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace weylfrac {

/// Exact rational scalar backed by GMP. Values are always canonical:
/// gcd(|numerator|, denominator) = 1, denominator > 0, zero is 0/1.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(int n) : v_(static_cast<long>(n)) {}

    Rat(long num, long den) {
        if (den == 0)
            throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rat(const mpz_class& n) : v_(n) {}

    /// Accepts "n" and "n/d" with optional sign, base 10.
    static Rat from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        if (mpz_sgn(v.get_den().get_mpz_t()) == 0)
            throw std::domain_error("Rat: zero denominator in '" + s + "'");
        v.canonicalize();
        return Rat(raw_tag{}, std::move(v));
    }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rat abs() const { return Rat(raw_tag{}, mpq_class(::abs(v_))); }

    Rat operator-() const { return Rat(raw_tag{}, mpq_class(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero())
            throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    /// gcd over Q: gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2), nonnegative.
    /// Used for polynomial content extraction.
    static Rat gcd(const Rat& a, const Rat& b) {
        mpz_class gn, ld;
        mpz_gcd(gn.get_mpz_t(), a.v_.get_num().get_mpz_t(),
                b.v_.get_num().get_mpz_t());
        mpz_lcm(ld.get_mpz_t(), a.v_.get_den().get_mpz_t(),
                b.v_.get_den().get_mpz_t());
        mpq_class r(gn, ld);
        r.canonicalize();
        return Rat(raw_tag{}, std::move(r));
    }

    /// Reduced decimal form: "5", "-3/2".
    std::string to_string() const { return v_.get_str(); }

    /// k! as an exact integer value.
    static Rat factorial(unsigned k) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), k);
        return Rat(f);
    }

  private:
    struct raw_tag {};
    Rat(raw_tag, mpq_class v) : v_(std::move(v)) {} // skips canonicalize
    mpq_class v_;
};

} // namespace weylfrac
