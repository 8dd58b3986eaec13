#pragma once

#include <map>
#include <string>
#include <vector>

#include "addfeq/rational.hpp"

namespace addfeq {

// Exponent vector with trailing zeros trimmed.
using Mono = std::vector<unsigned>;

unsigned mono_degree(const Mono& m);

// Graded lexicographic, descending, so map iteration starts at the leading
// term.
struct MonoOrder {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse multivariate polynomial over Q in variables t1, t2, ...
class MPoly {
public:
    using TermMap = std::map<Mono, Rational, MonoOrder>;

    MPoly() = default;
    explicit MPoly(Rational c);

    static MPoly variable(unsigned idx); // 0-based: variable(0) is t1
    static MPoly monomial(Mono m, Rational c);

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    Rational constant_value() const;

    unsigned total_degree() const; // 0 for the zero polynomial
    unsigned degree_in(unsigned var) const;
    unsigned nvars() const;

    void add_term(const Mono& m, const Rational& c);

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);

    MPoly scaled(const Rational& s) const;
    MPoly pow(unsigned e) const;
    MPoly derivative(unsigned var) const;

    const std::pair<const Mono, Rational>& leading() const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

    // Exact division; fails (returns false) when b does not divide a.
    static bool try_divexact(const MPoly& a, const MPoly& b, MPoly& quotient);
    static MPoly divexact(const MPoly& a, const MPoly& b);

    // Monic gcd (leading coefficient 1), computed by content/primitive-part
    // recursion over the top variable.
    static MPoly gcd(const MPoly& a, const MPoly& b);

    std::string str() const;

private:
    TermMap t_;
};

} // namespace addfeq
