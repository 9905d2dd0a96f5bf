#include "weylfrac/weyl.hpp"

#include <stdexcept>

namespace weylfrac {

namespace {
const Rat kZero{};
} // namespace

Word word_from_string(std::string_view s) {
    Word w;
    w.reserve(s.size());
    for (char ch : s) {
        if (ch == 'x')
            w.push_back(Gen::X);
        else if (ch == 'y')
            w.push_back(Gen::Y);
        else
            throw std::invalid_argument(std::string("word: bad letter '") +
                                        ch + "'");
    }
    return w;
}

WeylPoly WeylPoly::monomial(int xp, int yp, const Rat& c) {
    if (xp < 0 || yp < 0)
        throw std::invalid_argument("WeylPoly::monomial: negative power");
    WeylPoly f;
    f.add_term(xp, yp, c);
    return f;
}

WeylPoly WeylPoly::from_xpoly(const XPoly& p) {
    WeylPoly f;
    for (int i = 0; i <= p.degree(); ++i)
        f.add_term(i, 0, p.coeff(i));
    return f;
}

WeylPoly WeylPoly::from_y_coefficients(const std::vector<XPoly>& coeffs) {
    WeylPoly f;
    for (size_t q = 0; q < coeffs.size(); ++q)
        for (int i = 0; i <= coeffs[q].degree(); ++i)
            f.add_term(i, static_cast<int>(q), coeffs[q].coeff(i));
    return f;
}

void WeylPoly::add_term(int xp, int yp, const Rat& c) {
    if (c.is_zero())
        return;
    Mono m{xp, yp};
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

bool WeylPoly::is_invertible() const {
    return terms_.size() == 1 && terms_.begin()->first == Mono{0, 0};
}

bool WeylPoly::is_one() const {
    return is_invertible() && terms_.begin()->second.is_one();
}

const Rat& WeylPoly::coeff(int xp, int yp) const {
    auto it = terms_.find(Mono{xp, yp});
    return it == terms_.end() ? kZero : it->second;
}

int WeylPoly::deg_y() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        if (m.yp > d)
            d = m.yp;
    return d;
}

int WeylPoly::deg_x() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        if (m.xp > d)
            d = m.xp;
    return d;
}

XPoly WeylPoly::leading_ycoef() const {
    if (is_zero())
        throw std::domain_error("leading_ycoef: zero element");
    return y_coefficients().back();
}

std::vector<XPoly> WeylPoly::y_coefficients() const {
    int m = deg_y();
    std::vector<XPoly> out;
    if (m < 0)
        return out;
    std::vector<std::vector<Rat>> rows(static_cast<size_t>(m) + 1);
    for (const auto& [mono, c] : terms_) {
        auto& row = rows[static_cast<size_t>(mono.yp)];
        if (static_cast<int>(row.size()) <= mono.xp)
            row.resize(static_cast<size_t>(mono.xp) + 1, Rat(0));
        row[static_cast<size_t>(mono.xp)] = c;
    }
    out.reserve(rows.size());
    for (auto& row : rows)
        out.emplace_back(std::move(row));
    return out;
}

WeylPoly WeylPoly::operator-() const {
    WeylPoly r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

WeylPoly& WeylPoly::operator+=(const WeylPoly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m.xp, m.yp, c);
    return *this;
}

WeylPoly& WeylPoly::operator-=(const WeylPoly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m.xp, m.yp, -c);
    return *this;
}

WeylPoly scale(const WeylPoly& f, const Rat& c) {
    WeylPoly r;
    if (c.is_zero())
        return r;
    for (const auto& [m, fc] : f.terms())
        r.add_term(m.xp, m.yp, c * fc);
    return r;
}

WeylPoly dx(const WeylPoly& f) {
    WeylPoly r;
    for (const auto& [m, c] : f.terms())
        if (m.xp > 0)
            r.add_term(m.xp - 1, m.yp, Rat(m.xp) * c);
    return r;
}

WeylPoly dy(const WeylPoly& f) {
    WeylPoly r;
    for (const auto& [m, c] : f.terms())
        if (m.yp > 0)
            r.add_term(m.xp, m.yp - 1, Rat(m.yp) * c);
    return r;
}

Rat binom(int k, int alpha) {
    if (alpha < 0 || alpha > k)
        throw std::domain_error("binom: alpha out of range");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k),
                 static_cast<unsigned long>(alpha));
    return Rat(b);
}

Rat c_qr(int q, int r, int alpha) {
    if (alpha < 0 || alpha > q || alpha > r)
        throw std::domain_error("c_qr: alpha out of range");
    Rat num = Rat::factorial(static_cast<unsigned>(q)) *
              Rat::factorial(static_cast<unsigned>(r));
    Rat den = Rat::factorial(static_cast<unsigned>(q - alpha)) *
              Rat::factorial(static_cast<unsigned>(alpha)) *
              Rat::factorial(static_cast<unsigned>(r - alpha));
    return num / den;
}

WeylPoly normal_order(const Word& w) {
    std::string start;
    start.reserve(w.size());
    for (Gen g : w)
        start.push_back(static_cast<char>(g));

    std::map<std::string, Rat> active;
    active.emplace(std::move(start), Rat(1));
    WeylPoly out;
    while (!active.empty()) {
        auto it = active.begin();
        std::string word = it->first;
        Rat coef = it->second;
        active.erase(it);
        if (coef.is_zero())
            continue;
        size_t pos = word.find("yx");
        if (pos == std::string::npos) {
            int xp = 0, yp = 0;
            for (char ch : word)
                (ch == 'x' ? xp : yp)++;
            out.add_term(xp, yp, coef);
            continue;
        }
        std::string swapped = word;
        swapped[pos] = 'x';
        swapped[pos + 1] = 'y';
        std::string contracted = word;
        contracted.erase(pos, 2);
        active[swapped] += coef;
        active[contracted] += coef;
    }
    return out;
}

WeylPoly mul_rewrite(const WeylPoly& f, const WeylPoly& g) {
    WeylPoly out;
    for (const auto& [fm, fc] : f.terms()) {
        for (const auto& [gm, gc] : g.terms()) {
            // x^p y^q * x^r y^s expands through y^q x^r
            int q = fm.yp, r = gm.xp;
            Rat base = fc * gc;
            int top = q < r ? q : r;
            for (int alpha = 0; alpha <= top; ++alpha)
                out.add_term(fm.xp + r - alpha, q - alpha + gm.yp,
                             base * c_qr(q, r, alpha));
        }
    }
    return out;
}

WeylPoly mul_commutative(const WeylPoly& f, const WeylPoly& g) {
    WeylPoly out;
    for (const auto& [fm, fc] : f.terms())
        for (const auto& [gm, gc] : g.terms())
            out.add_term(fm.xp + gm.xp, fm.yp + gm.yp, fc * gc);
    return out;
}

WeylPoly mul_closed(const WeylPoly& f, const WeylPoly& g) {
    WeylPoly out;
    WeylPoly fy = f, gx = g;
    Rat fact(1);
    for (int alpha = 0; !fy.is_zero() && !gx.is_zero(); ++alpha) {
        if (alpha > 0) {
            fy = dy(fy);
            gx = dx(gx);
            if (fy.is_zero() || gx.is_zero())
                break;
            fact *= Rat(alpha);
        }
        out += scale(mul_commutative(fy, gx), Rat(1) / fact);
    }
    return out;
}

WeylPoly commutator(const WeylPoly& f, const WeylPoly& g) {
    return mul_closed(f, g) - mul_closed(g, f);
}

WeylPoly pow(const WeylPoly& f, int k) {
    if (k < 0)
        throw std::invalid_argument("pow: negative exponent");
    WeylPoly acc(Rat(1));
    for (int i = 0; i < k; ++i)
        acc = mul_closed(acc, f);
    return acc;
}

} // namespace weylfrac
