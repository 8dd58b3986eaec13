#include "addfeq/leibniz.hpp"

#include <mutex>

#include "addfeq/combinatorics.hpp"
#include "addfeq/error.hpp"

namespace addfeq {

namespace {

std::mutex g_limits_mutex;
LeibnizLimits g_limits;

void check_limits(unsigned k, unsigned p) {
    LeibnizLimits lim = leibniz_limits();
    require_input(k <= lim.max_order,
                  "expansion order " + std::to_string(k) + " exceeds cap " +
                      std::to_string(lim.max_order));
    require_input(p >= 1, "expansion arity must be >= 1");
    require_input(p <= lim.max_arity,
                  "expansion arity " + std::to_string(p) + " exceeds cap " +
                      std::to_string(lim.max_arity));
    mpz_class count = binomial(k + p - 1, p - 1);
    require_input(count <= static_cast<unsigned long>(lim.max_compositions),
                  "expansion has " + count.get_str() +
                      " compositions, beyond the configured limit");
}

// Visit all weak compositions (l_1,...,l_p) of k.
template <class F>
void for_each_composition(unsigned k, unsigned p, F&& fn) {
    std::vector<unsigned> comp(p, 0u);
    // place `rest` into positions [idx, p)
    auto rec = [&](auto&& self, unsigned idx, unsigned rest) -> void {
        if (idx + 1 == p) {
            comp[idx] = rest;
            fn(comp);
            return;
        }
        for (unsigned v = 0; v <= rest; ++v) {
            comp[idx] = v;
            self(self, idx + 1, rest - v);
        }
    };
    rec(rec, 0, k);
}

StateMonomial monomial_of_composition(const std::vector<unsigned>& comp) {
    StateMonomial m;
    std::map<unsigned, unsigned> counts;
    for (unsigned l : comp) {
        if (l == 0)
            ++m.x_exp;
        else
            ++counts[l];
    }
    for (auto [t, j] : counts) m.d_exps.emplace_back(t, j);
    return m;
}

} // namespace

LeibnizLimits leibniz_limits() {
    std::lock_guard<std::mutex> lock(g_limits_mutex);
    return g_limits;
}

void set_leibniz_limits(const LeibnizLimits& limits) {
    std::lock_guard<std::mutex> lock(g_limits_mutex);
    g_limits = limits;
}

const StatePoly& expand_power(unsigned k, unsigned p) {
    static std::mutex cache_mutex;
    static std::map<std::pair<unsigned, unsigned>, StatePoly> cache;

    check_limits(k, p);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({k, p});
        if (it != cache.end()) return it->second;
    }

    StatePoly poly;
    for_each_composition(k, p, [&](const std::vector<unsigned>& comp) {
        poly.add_term(monomial_of_composition(comp), multinomial(k, comp));
    });

    std::lock_guard<std::mutex> lock(cache_mutex);
    // std::map nodes are stable, so returned references stay valid.
    return cache.emplace(std::pair{k, p}, std::move(poly)).first->second;
}

StatePoly expand_power_recursive(unsigned k, unsigned p) {
    check_limits(k, p);
    StatePoly poly = StatePoly::monomial(StateMonomial::x_power(p), Rational(1));
    for (unsigned step = 0; step < k; ++step) {
        StatePoly next;
        for (const auto& [m, c] : poly.terms()) {
            // product rule over the factors of the monomial
            if (m.x_exp > 0) {
                StateMonomial der = m;
                --der.x_exp;
                der = der * StateMonomial::d_var(1);
                next.add_term(der, c * Rational(static_cast<long>(m.x_exp)));
            }
            for (std::size_t idx = 0; idx < m.d_exps.size(); ++idx) {
                auto [t, j] = m.d_exps[idx];
                StateMonomial der;
                der.x_exp = m.x_exp;
                for (std::size_t other = 0; other < m.d_exps.size(); ++other) {
                    if (other == idx) continue;
                    der.d_exps.push_back(m.d_exps[other]);
                }
                if (j > 1) {
                    // keep d_exps sorted: re-insert reduced exponent
                    der = der * StateMonomial::d_var(t, j - 1);
                }
                der = der * StateMonomial::d_var(t + 1);
                next.add_term(der, c * Rational(static_cast<long>(j)));
            }
        }
        poly = std::move(next);
    }
    return poly;
}

ProductExpansion expand_product(unsigned k, unsigned p) {
    check_limits(k, p);
    ProductExpansion e;
    e.arity = p;
    e.order = k;
    for_each_composition(k, p, [&](const std::vector<unsigned>& comp) {
        e.terms.emplace(comp, multinomial(k, comp));
    });
    return e;
}

std::string MultiDerivMonomial::str() const {
    std::string s;
    if (x_exp > 0) s = x_exp == 1 ? "X" : "X^" + std::to_string(x_exp);
    for (const auto& [beta, j] : d_exps) {
        if (!s.empty()) s += "*";
        s += "D" + beta.str();
        if (j > 1) s += "^" + std::to_string(j);
    }
    return s.empty() ? "1" : s;
}

MultiDerivPoly MultiDerivPoly::x_power(unsigned p) {
    MultiDerivPoly r;
    MultiDerivMonomial m;
    m.x_exp = p;
    r.add_term(m, Rational(1));
    return r;
}

void MultiDerivPoly::add_term(const MultiDerivMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiDerivPoly MultiDerivPoly::derive(unsigned var) const {
    std::vector<unsigned> unit(var + 1, 0u);
    unit[var] = 1;
    const MultiIndex e_var(unit);

    MultiDerivPoly next;
    for (const auto& [m, c] : terms_) {
        if (m.x_exp > 0) {
            MultiDerivMonomial der = m;
            --der.x_exp;
            bool found = false;
            for (auto& [beta, j] : der.d_exps) {
                if (beta == e_var) {
                    ++j;
                    found = true;
                    break;
                }
            }
            if (!found) {
                der.d_exps.emplace_back(e_var, 1u);
                std::sort(der.d_exps.begin(), der.d_exps.end());
            }
            next.add_term(der, c * Rational(static_cast<long>(m.x_exp)));
        }
        for (std::size_t idx = 0; idx < m.d_exps.size(); ++idx) {
            auto [beta, j] = m.d_exps[idx];
            MultiDerivMonomial der;
            der.x_exp = m.x_exp;
            for (std::size_t other = 0; other < m.d_exps.size(); ++other) {
                if (other == idx) continue;
                der.d_exps.push_back(m.d_exps[other]);
            }
            auto bump = [&](const MultiIndex& target, unsigned count) {
                for (auto& [b, e] : der.d_exps) {
                    if (b == target) {
                        e += count;
                        return;
                    }
                }
                der.d_exps.emplace_back(target, count);
            };
            if (j > 1) bump(beta, j - 1);
            bump(beta + e_var, 1);
            std::sort(der.d_exps.begin(), der.d_exps.end());
            next.add_term(der, c * Rational(static_cast<long>(j)));
        }
    }
    return next;
}

MultiDerivPoly bell_expand(const MultiIndex& alpha, unsigned p) {
    require_input(p >= 1, "bell_expand arity must be >= 1");
    LeibnizLimits lim = leibniz_limits();
    require_input(alpha.total() <= lim.max_order, "bell_expand order exceeds cap");
    require_input(p <= lim.max_arity, "bell_expand arity exceeds cap");

    MultiDerivPoly poly = MultiDerivPoly::x_power(p);
    for (unsigned var = alpha.dim(); var-- > 0;) {
        for (unsigned rep = 0; rep < alpha[var]; ++rep) poly = poly.derive(var);
    }
    return poly;
}

StatePoly collapse_single(const MultiDerivPoly& p) {
    StatePoly r;
    for (const auto& [m, c] : p.terms()) {
        StateMonomial s = StateMonomial::x_power(m.x_exp);
        for (const auto& [beta, j] : m.d_exps) s = s * StateMonomial::d_var(beta.total(), j);
        r.add_term(s, c);
    }
    return r;
}

} // namespace addfeq
