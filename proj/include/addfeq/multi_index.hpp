#pragma once

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "addfeq/combinatorics.hpp"
#include "addfeq/error.hpp"

namespace addfeq {

// Finite sequence of nonnegative integers with trailing zeros trimmed, so
// equality and ordering are structural.
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(std::initializer_list<unsigned> e) : e_(e) { trim(); }
    explicit MultiIndex(std::vector<unsigned> e) : e_(std::move(e)) { trim(); }

    unsigned dim() const { return static_cast<unsigned>(e_.size()); }
    unsigned operator[](unsigned i) const { return i < e_.size() ? e_[i] : 0u; }
    const std::vector<unsigned>& entries() const { return e_; }
    bool empty() const { return e_.empty(); }

    // |alpha| = sum of entries
    unsigned total() const {
        unsigned s = 0;
        for (unsigned v : e_) s += v;
        return s;
    }

    // alpha! = product of entry factorials
    mpz_class factorial_value() const {
        mpz_class acc = 1;
        for (unsigned v : e_) acc *= addfeq::factorial(v);
        return acc;
    }

    // componentwise <=
    bool leq(const MultiIndex& o) const {
        for (unsigned i = 0; i < dim(); ++i)
            if ((*this)[i] > o[i]) return false;
        return true;
    }

    MultiIndex operator+(const MultiIndex& o) const {
        std::vector<unsigned> e(std::max(e_.size(), o.e_.size()), 0u);
        for (unsigned i = 0; i < e.size(); ++i) e[i] = (*this)[i] + o[i];
        return MultiIndex(std::move(e));
    }

    // componentwise difference; requires o <= *this
    MultiIndex operator-(const MultiIndex& o) const {
        check_invariant(o.leq(*this), "multi-index subtraction underflow");
        std::vector<unsigned> e(e_.size(), 0u);
        for (unsigned i = 0; i < e.size(); ++i) e[i] = e_[i] - o[i];
        return MultiIndex(std::move(e));
    }

    // binom(alpha, beta) = product of componentwise binomials
    static mpz_class binom(const MultiIndex& a, const MultiIndex& b) {
        mpz_class acc = 1;
        unsigned d = std::max(a.dim(), b.dim());
        for (unsigned i = 0; i < d; ++i) acc *= binomial(a[i], b[i]);
        return acc;
    }

    // visit every beta with beta <= alpha (componentwise), in lexicographic order
    template <class F>
    void for_each_leq(F&& fn) const {
        std::vector<unsigned> beta(e_.size(), 0u);
        while (true) {
            fn(MultiIndex(beta));
            unsigned i = 0;
            for (; i < e_.size(); ++i) {
                if (beta[i] < e_[i]) {
                    ++beta[i];
                    for (unsigned j = 0; j < i; ++j) beta[j] = 0;
                    break;
                }
            }
            if (i == e_.size()) break;
        }
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return a.e_ <=> b.e_;
    }

    std::string str() const {
        std::string s = "(";
        for (unsigned i = 0; i < e_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

private:
    void trim() {
        while (!e_.empty() && e_.back() == 0) e_.pop_back();
    }

    std::vector<unsigned> e_;
};

} // namespace addfeq
