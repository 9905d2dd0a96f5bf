#include "weylfrac/xpoly.hpp"

#include <stdexcept>

namespace weylfrac {

namespace {
const Rat kZero{};
} // namespace

void XPoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

XPoly XPoly::monomial(int k, const Rat& c) {
    if (k < 0)
        throw std::invalid_argument("XPoly::monomial: negative power");
    if (c.is_zero())
        return XPoly{};
    XPoly p;
    p.c_.assign(static_cast<size_t>(k) + 1, Rat(0));
    p.c_.back() = c;
    return p;
}

const Rat& XPoly::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= c_.size())
        return kZero;
    return c_[static_cast<size_t>(k)];
}

const Rat& XPoly::leading() const {
    if (c_.empty())
        throw std::domain_error("XPoly::leading: zero polynomial");
    return c_.back();
}

XPoly XPoly::operator-() const {
    XPoly r(*this);
    for (auto& c : r.c_)
        c = -c;
    return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero())
        return XPoly{};
    XPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero())
                r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim(); // nonzero leading product, but keep the invariant local
    return r;
}

XPoly operator*(const Rat& c, const XPoly& p) {
    if (c.is_zero())
        return XPoly{};
    XPoly r(p);
    for (auto& e : r.c_)
        e *= c;
    return r;
}

XPoly XPoly::derivative(int k) const {
    if (k < 0)
        throw std::invalid_argument("XPoly::derivative: negative order");
    XPoly r(*this);
    for (int step = 0; step < k; ++step) {
        if (r.c_.empty())
            return r;
        std::vector<Rat> d;
        d.reserve(r.c_.size() > 0 ? r.c_.size() - 1 : 0);
        for (size_t i = 1; i < r.c_.size(); ++i)
            d.push_back(Rat(static_cast<long>(i)) * r.c_[i]);
        r.c_ = std::move(d);
        r.trim();
    }
    return r;
}

std::pair<XPoly, XPoly> divmod(const XPoly& p, const XPoly& d) {
    if (d.is_zero())
        throw std::domain_error("XPoly divmod: division by zero polynomial");
    XPoly rem = p;
    if (p.degree() < d.degree())
        return {XPoly{}, rem};
    std::vector<Rat> q(static_cast<size_t>(p.degree() - d.degree()) + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        Rat factor = rem.leading() / d.leading();
        q[static_cast<size_t>(shift)] = factor;
        rem -= XPoly::monomial(shift, factor) * d;
    }
    return {XPoly(std::move(q)), rem};
}

XPoly divexact(const XPoly& p, const XPoly& d) {
    if (d.is_zero())
        throw std::domain_error("divexact: division by zero polynomial");
    if (p.is_zero())
        return XPoly{};
    auto [q, r] = divmod(p, d);
    if (!r.is_zero())
        throw std::domain_error("divexact: " + d.to_string() +
                                " does not divide " + p.to_string());
    return q;
}

XPoly gcd(const XPoly& a, const XPoly& b) {
    XPoly u = a, v = b;
    while (!v.is_zero()) {
        XPoly r = divmod(u, v).second;
        u = std::move(v);
        v = std::move(r);
        if (!v.is_zero()) {
            // monic normalization keeps coefficient growth in check
            Rat inv_lead = Rat(1) / v.leading();
            v = inv_lead * v;
        }
    }
    if (u.is_zero())
        return u;
    return (Rat(1) / u.leading()) * u;
}

XPoly lcm(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero())
        return XPoly{};
    XPoly g = gcd(a, b);
    XPoly l = divexact(a, g) * b;
    return (Rat(1) / l.leading()) * l;
}

std::pair<Rat, XPoly> XPoly::content_primitive() const {
    if (is_zero())
        throw std::domain_error("content_primitive: zero polynomial");
    Rat content(0);
    for (const auto& c : c_)
        content = Rat::gcd(content, c);
    if (leading().sign() < 0)
        content = -content;
    XPoly prim;
    prim.c_.reserve(c_.size());
    for (const auto& c : c_)
        prim.c_.push_back(c / content);
    return {content, prim};
}

Rat XPoly::eval_at(const Rat& v) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * v + c_[i];
    return acc;
}

std::string XPoly::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& c = c_[i];
        if (c.is_zero())
            continue;
        Rat mag = c.abs();
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        bool unit = mag.is_one();
        if (i == 0 || !unit)
            out += mag.to_string();
        if (i > 0) {
            if (!unit)
                out += "*";
            out += "x";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace weylfrac
