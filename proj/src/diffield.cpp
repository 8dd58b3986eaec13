#include "addfeq/diffield.hpp"

#include <algorithm>

#include "addfeq/combinatorics.hpp"
#include "addfeq/error.hpp"

namespace addfeq {

FieldElement::FieldElement(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require_input(!den_.is_zero(), "field element with zero denominator");
    reduce();
}

void FieldElement::reduce() {
    if (num_.is_zero()) {
        den_ = MPoly(Rational(1));
        return;
    }
    MPoly g = MPoly::gcd(num_, den_);
    if (!(g == MPoly(Rational(1)))) {
        num_ = MPoly::divexact(num_, g);
        den_ = MPoly::divexact(den_, g);
    }
    Rational lead = den_.leading().second;
    if (!lead.is_one()) {
        Rational inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.num_ * b.num_, a.den_ * b.den_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_input(!b.is_zero(), "division by zero field element");
    return FieldElement(a.num_ * b.den_, a.den_ * b.num_);
}

FieldElement FieldElement::pow(unsigned e) const {
    FieldElement r(Rational(1));
    FieldElement base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string FieldElement::str() const {
    if (den_ == MPoly(Rational(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

FieldElement partial(unsigned var, const FieldElement& e) {
    // (n/d)' = (n' d - n d') / d^2
    MPoly dn = e.num().derivative(var);
    MPoly dd = e.den().derivative(var);
    return FieldElement(dn * e.den() - e.num() * dd, e.den() * e.den());
}

DiffOperator DiffOperator::identity(Rational c) {
    DiffOperator op;
    if (!c.is_zero()) op.terms.push_back({std::move(c), {}});
    return op;
}

DiffOperator DiffOperator::partial_power(unsigned var, unsigned k, Rational c) {
    DiffOperator op;
    if (c.is_zero()) return op;
    op.terms.push_back({std::move(c), std::vector<unsigned>(k, var)});
    return op;
}

DiffOperator DiffOperator::scaled(const Rational& s) const {
    DiffOperator op;
    if (s.is_zero()) return op;
    for (const OpTerm& t : terms) op.terms.push_back({t.coeff * s, t.composition});
    return op;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
}

FieldElement apply_operator(const DiffOperator& op, const FieldElement& e) {
    FieldElement acc;
    for (const DiffOperator::OpTerm& t : op.terms) {
        FieldElement v = e;
        for (auto it = t.composition.rbegin(); it != t.composition.rend(); ++it)
            v = partial(*it, v);
        acc = acc + FieldElement(t.coeff) * v;
    }
    return acc;
}

FieldElement residual(const EquationSpec& spec, const std::vector<DiffOperator>& f_ops,
                      const std::vector<DiffOperator>& g_ops, const FieldElement& x) {
    require_input(f_ops.size() == spec.terms.size() && g_ops.size() == spec.terms.size(),
                  "residual needs one operator per term and side");
    FieldElement acc;
    for (std::size_t t = 0; t < spec.terms.size(); ++t) {
        const Term& term = spec.terms[t];
        FieldElement fv = apply_operator(f_ops[t], x.pow(term.p));
        FieldElement gv = apply_operator(g_ops[t], x.pow(term.q));
        acc = acc + FieldElement(term.coef) * fv * gv;
    }
    return acc;
}

bool polarization_check(unsigned n, unsigned d_var, const FieldElement& x,
                        const FieldElement& y, unsigned m_steps) {
    require_input(n >= 1, "polarization_check needs n >= 1");
    require_input(m_steps >= n, "polarization_check needs m >= n");
    auto trace = [&](const FieldElement& z) { return partial(d_var, z).pow(n); };

    DeltaStack stack;
    stack.increments.assign(m_steps, y);
    FieldElement got = stack.apply(trace, x);

    if (m_steps > n) return got.is_zero();
    FieldElement expected = FieldElement(Rational(factorial(n))) * partial(d_var, y).pow(n);
    return got == expected;
}

bool moment_check(const MultiIndex& alpha, const std::vector<unsigned>& derivation_vars,
                  const FieldElement& x, const FieldElement& y) {
    require_input(alpha.dim() <= derivation_vars.size(),
                  "moment_check needs a derivation per multi-index entry");
    require_input(alpha.total() <= 8, "moment_check order cap exceeded");

    auto phi = [&](const MultiIndex& beta, const FieldElement& z) {
        FieldElement v = z;
        for (unsigned pos = beta.dim(); pos-- > 0;)
            for (unsigned rep = 0; rep < beta[pos]; ++rep)
                v = partial(derivation_vars[pos], v);
        return v;
    };

    FieldElement lhs = phi(alpha, x * y);
    FieldElement rhs;
    alpha.for_each_leq([&](const MultiIndex& beta) {
        Rational c = Rational(MultiIndex::binom(alpha, beta));
        rhs = rhs + FieldElement(c) * phi(beta, x) * phi(alpha - beta, y);
    });
    return lhs == rhs;
}

namespace {

// all index subsets of {0..n-1} with `size` elements, lexicographic
template <class F>
void for_each_subset(unsigned n, unsigned size, F&& fn) {
    std::vector<unsigned> idx(size);
    for (unsigned i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int pos = static_cast<int>(size) - 1;
        while (pos >= 0 && idx[static_cast<unsigned>(pos)] ==
                               n - size + static_cast<unsigned>(pos))
            --pos;
        if (pos < 0) break;
        ++idx[static_cast<unsigned>(pos)];
        for (unsigned j = static_cast<unsigned>(pos) + 1; j < size; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

FieldElement symmetrized_residual(const EquationSpec& spec,
                                  const std::vector<DiffOperator>& f_ops,
                                  const std::vector<DiffOperator>& g_ops,
                                  const std::vector<FieldElement>& points) {
    require_input(spec.common_degree.has_value(),
                  "symmetrized residual needs a homogeneous equation");
    const unsigned N = *spec.common_degree;
    require_input(points.size() == N, "symmetrization needs exactly N points");
    require_input(N <= kMaxSymmetrizationPoints, "too many symmetrization points");
    require_input(f_ops.size() == spec.terms.size() && g_ops.size() == spec.terms.size(),
                  "residual needs one operator per term and side");

    // The permutation average of f(x_{s(1)}..x_{s(p)}) g(...) collapses to an
    // average over p-element subsets, since the products commute.
    FieldElement acc;
    for (std::size_t t = 0; t < spec.terms.size(); ++t) {
        const Term& term = spec.terms[t];
        FieldElement term_sum;
        for_each_subset(N, term.p, [&](const std::vector<unsigned>& subset) {
            FieldElement left(Rational(1)), right(Rational(1));
            std::vector<bool> used(N, false);
            for (unsigned i : subset) used[i] = true;
            for (unsigned i = 0; i < N; ++i)
                (used[i] ? left : right) = (used[i] ? left : right) * points[i];
            term_sum = term_sum + apply_operator(f_ops[t], left) * apply_operator(g_ops[t], right);
        });
        Rational weight = term.coef / Rational(binomial(N, term.p));
        acc = acc + FieldElement(weight) * term_sum;
    }
    return acc;
}

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

template <class F>
void for_each_mono_upto(unsigned max_degree, unsigned m, F&& fn) {
    Mono mono(m, 0u);
    auto rec = [&](auto&& self, unsigned var, unsigned remaining) -> void {
        if (var == m) {
            fn(mono);
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            mono[var] = e;
            self(self, var + 1, remaining - e);
        }
        mono[var] = 0;
    };
    rec(rec, 0, max_degree);
}

} // namespace

FieldElement random_element(unsigned max_degree, unsigned m, std::uint64_t seed) {
    require_input(m >= 1, "random_element needs at least one variable");
    SplitMix64 rng{seed ^ 0x5bf0f53a1a4e3c7dULL};
    MPoly poly;
    for_each_mono_upto(max_degree, m, [&](const Mono& mono) {
        long c = static_cast<long>(rng.next() % 41u) - 20;
        if (c != 0) poly.add_term(mono, Rational(c));
    });
    if (poly.is_zero()) poly += MPoly(Rational(1));
    return FieldElement(std::move(poly));
}

} // namespace addfeq
