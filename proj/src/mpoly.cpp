#include "addfeq/mpoly.hpp"

#include <algorithm>

#include "addfeq/error.hpp"

namespace addfeq {

unsigned mono_degree(const Mono& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

bool MonoOrder::operator()(const Mono& a, const Mono& b) const {
    unsigned da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned av = i < a.size() ? a[i] : 0u;
        unsigned bv = i < b.size() ? b[i] : 0u;
        if (av != bv) return av > bv;
    }
    return false;
}

namespace {

Mono trim(Mono m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(std::max(a.size(), b.size()), 0u);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (i < a.size() ? a[i] : 0u) + (i < b.size() ? b[i] : 0u);
    return trim(std::move(r));
}

bool mono_divides(const Mono& a, const Mono& b) { // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > (i < b.size() ? b[i] : 0u)) return false;
    return true;
}

Mono mono_div(const Mono& b, const Mono& a) { // b / a, requires a | b
    Mono r(b.size(), 0u);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - (i < a.size() ? a[i] : 0u);
    return trim(std::move(r));
}

} // namespace

MPoly::MPoly(Rational c) {
    if (!c.is_zero()) t_.emplace(Mono{}, std::move(c));
}

MPoly MPoly::variable(unsigned idx) {
    Mono m(idx + 1, 0u);
    m[idx] = 1;
    return monomial(std::move(m), Rational(1));
}

MPoly MPoly::monomial(Mono m, Rational c) {
    MPoly p;
    if (!c.is_zero()) p.t_.emplace(trim(std::move(m)), std::move(c));
    return p;
}

Rational MPoly::constant_value() const {
    check_invariant(is_constant(), "constant_value on non-constant polynomial");
    return t_.empty() ? Rational(0) : t_.begin()->second;
}

unsigned MPoly::total_degree() const {
    return t_.empty() ? 0u : mono_degree(t_.begin()->first);
}

unsigned MPoly::degree_in(unsigned var) const {
    unsigned d = 0;
    for (const auto& [m, c] : t_)
        if (var < m.size()) d = std::max(d, m[var]);
    return d;
}

unsigned MPoly::nvars() const {
    unsigned n = 0;
    for (const auto& [m, c] : t_) n = std::max<unsigned>(n, static_cast<unsigned>(m.size()));
    return n;
}

void MPoly::add_term(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    Mono key = trim(m);
    auto [it, inserted] = t_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

MPoly MPoly::scaled(const Rational& s) const {
    MPoly r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, c * s);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly acc(Rational(1));
    MPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

MPoly MPoly::derivative(unsigned var) const {
    MPoly r;
    for (const auto& [m, c] : t_) {
        if (var >= m.size() || m[var] == 0) continue;
        Mono der = m;
        unsigned e = der[var];
        --der[var];
        r.add_term(trim(std::move(der)), c * Rational(static_cast<long>(e)));
    }
    return r;
}

const std::pair<const Mono, Rational>& MPoly::leading() const {
    check_invariant(!t_.empty(), "leading term of zero polynomial");
    return *t_.begin();
}

bool MPoly::try_divexact(const MPoly& a, const MPoly& b, MPoly& quotient) {
    check_invariant(!b.is_zero(), "division by zero polynomial");
    MPoly q, r = a;
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        const auto& [bm, bc] = b.leading();
        if (!mono_divides(bm, rm)) return false;
        MPoly t = MPoly::monomial(mono_div(rm, bm), rc / bc);
        q += t;
        r -= t * b;
    }
    quotient = std::move(q);
    return true;
}

MPoly MPoly::divexact(const MPoly& a, const MPoly& b) {
    MPoly q;
    check_invariant(try_divexact(a, b, q), "inexact polynomial division");
    return q;
}

// --------------------------------------------------------------------------
// gcd machinery

namespace {

MPoly make_monic(const MPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading().second.inverse());
}

// componentwise minimum exponent over all terms
Mono monomial_content(const MPoly& p) {
    Mono content;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (first) {
            content = m;
            first = false;
            continue;
        }
        if (m.size() < content.size()) content.resize(m.size());
        for (std::size_t i = 0; i < content.size(); ++i)
            content[i] = std::min(content[i], m[i]);
        content = trim(std::move(content));
        if (content.empty()) break;
    }
    return content;
}

// coefficients of p viewed as a univariate polynomial in `var`
std::vector<MPoly> to_upoly(const MPoly& p, unsigned var) {
    std::vector<MPoly> up(p.degree_in(var) + 1);
    for (const auto& [m, c] : p.terms()) {
        unsigned e = var < m.size() ? m[var] : 0u;
        Mono rest = m;
        if (var < rest.size()) rest[var] = 0;
        up[e].add_term(trim(std::move(rest)), c);
    }
    while (up.size() > 1 && up.back().is_zero()) up.pop_back();
    return up;
}

MPoly from_upoly(const std::vector<MPoly>& up, unsigned var) {
    MPoly r;
    for (std::size_t e = 0; e < up.size(); ++e) {
        if (up[e].is_zero()) continue;
        Mono m(var + 1, 0u);
        m[var] = static_cast<unsigned>(e);
        r += up[e] * MPoly::monomial(std::move(m), Rational(1));
    }
    return r;
}

int upoly_deg(const std::vector<MPoly>& up) {
    for (int d = static_cast<int>(up.size()) - 1; d >= 0; --d)
        if (!up[d].is_zero()) return d;
    return -1;
}

MPoly upoly_content(const std::vector<MPoly>& up) {
    MPoly c;
    for (const MPoly& coeff : up) {
        if (coeff.is_zero()) continue;
        c = c.is_zero() ? coeff : MPoly::gcd(c, coeff);
        if (c.is_constant()) return MPoly(Rational(1));
    }
    return c.is_zero() ? MPoly(Rational(1)) : c;
}

std::vector<MPoly> upoly_primitive(const std::vector<MPoly>& up, const MPoly& content) {
    std::vector<MPoly> pp(up.size());
    for (std::size_t i = 0; i < up.size(); ++i)
        if (!up[i].is_zero()) pp[i] = MPoly::divexact(up[i], content);
    return pp;
}

// pseudo remainder of f by g in the top variable; both primitive upolys
std::vector<MPoly> upoly_prem(std::vector<MPoly> f, const std::vector<MPoly>& g) {
    int dg = upoly_deg(g);
    check_invariant(dg >= 0, "pseudo remainder by zero");
    const MPoly& lc_g = g[static_cast<std::size_t>(dg)];
    int df = upoly_deg(f);
    while (df >= dg && df >= 0) {
        MPoly lc_f = f[static_cast<std::size_t>(df)];
        int shift = df - dg;
        for (int i = 0; i <= df; ++i) {
            MPoly scaled = f[static_cast<std::size_t>(i)] * lc_g;
            if (i >= shift && i - shift <= dg)
                scaled -= lc_f * g[static_cast<std::size_t>(i - shift)];
            f[static_cast<std::size_t>(i)] = std::move(scaled);
        }
        f[static_cast<std::size_t>(df)] = MPoly(); // exact cancellation of the lead
        df = upoly_deg(f);
    }
    f.resize(static_cast<std::size_t>(std::max(df, 0)) + 1);
    return f;
}

} // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);

    // split off the monomial parts first; they are cheap and common
    Mono ca = monomial_content(a), cb = monomial_content(b);
    Mono common(std::min(ca.size(), cb.size()), 0u);
    for (std::size_t i = 0; i < common.size(); ++i) common[i] = std::min(ca[i], cb[i]);
    common = trim(std::move(common));
    MPoly a1 = divexact(a, monomial(ca, Rational(1)));
    MPoly b1 = divexact(b, monomial(cb, Rational(1)));
    MPoly common_factor = monomial(common, Rational(1));

    if (a1.is_constant() || b1.is_constant()) return make_monic(common_factor);

    unsigned var = std::max(a1.nvars(), b1.nvars()) - 1;
    if (a1.degree_in(var) == 0)
        return make_monic(common_factor * gcd(a1, upoly_content(to_upoly(b1, var))));
    if (b1.degree_in(var) == 0)
        return make_monic(common_factor * gcd(b1, upoly_content(to_upoly(a1, var))));

    std::vector<MPoly> ua = to_upoly(a1, var), ub = to_upoly(b1, var);
    MPoly cont_a = upoly_content(ua), cont_b = upoly_content(ub);
    std::vector<MPoly> f = upoly_primitive(ua, cont_a);
    std::vector<MPoly> g = upoly_primitive(ub, cont_b);
    MPoly cont_gcd = gcd(cont_a, cont_b);

    if (upoly_deg(f) < upoly_deg(g)) std::swap(f, g);
    while (true) {
        std::vector<MPoly> r = upoly_prem(f, g);
        int dr = upoly_deg(r);
        if (dr < 0) break;     // g divides f
        if (dr == 0) {
            // coprime in the top variable
            return make_monic(common_factor * cont_gcd);
        }
        f = std::move(g);
        g = upoly_primitive(r, upoly_content(r));
    }
    MPoly g_primitive = from_upoly(upoly_primitive(g, upoly_content(g)), var);
    return make_monic(common_factor * cont_gcd * g_primitive);
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : t_) {
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(i + 1);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        Rational mag = c.sign() < 0 ? -c : c;
        std::string piece;
        if (mono.empty())
            piece = mag.str();
        else if (mag.is_one())
            piece = mono;
        else
            piece = mag.str() + "*" + mono;
        if (first) {
            out = (c.sign() < 0 ? "-" : "") + piece;
            first = false;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + piece;
        }
    }
    return out;
}

} // namespace addfeq
