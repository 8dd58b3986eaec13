#pragma once

#include <compare>
#include <map>
#include <string>

#include "addfeq/error.hpp"
#include "addfeq/rational.hpp"

namespace addfeq {

// Structured tag for an unknown; never round-tripped through strings.
// The product unknown pi[i,k,l] stands for lambda_{i,k} * mu_{i,l}.
enum class UnknownKind : unsigned char { product };

struct UnknownId {
    UnknownKind kind = UnknownKind::product;
    int i = 0; // term index (1-based)
    int k = 0; // f-side order
    int l = 0; // g-side order

    static UnknownId product(int i, int k, int l) {
        return UnknownId{UnknownKind::product, i, k, l};
    }

    friend bool operator==(const UnknownId&, const UnknownId&) = default;
    friend std::strong_ordering operator<=>(const UnknownId&, const UnknownId&) = default;

    std::string str() const {
        return "pi[" + std::to_string(i) + "," + std::to_string(k) + "," +
               std::to_string(l) + "]";
    }
};

// Exact linear form in unknowns plus a constant. Zero coefficients are never
// stored.
class LinForm {
public:
    LinForm() = default;
    LinForm(Rational c) : constant_(std::move(c)) {}

    static LinForm unknown(const UnknownId& id, Rational coeff = Rational(1)) {
        LinForm f;
        if (!coeff.is_zero()) f.terms_.emplace(id, std::move(coeff));
        return f;
    }

    const std::map<UnknownId, Rational>& terms() const { return terms_; }
    const Rational& constant() const { return constant_; }

    bool is_zero() const { return terms_.empty() && constant_.is_zero(); }

    Rational coeff(const UnknownId& id) const {
        auto it = terms_.find(id);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    LinForm& operator+=(const LinForm& o) {
        constant_ += o.constant_;
        for (const auto& [id, c] : o.terms_) add_term(id, c);
        return *this;
    }

    LinForm& operator-=(const LinForm& o) {
        constant_ -= o.constant_;
        for (const auto& [id, c] : o.terms_) add_term(id, -c);
        return *this;
    }

    LinForm& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            constant_ = 0;
            return *this;
        }
        constant_ *= s;
        for (auto& [id, c] : terms_) c *= s;
        return *this;
    }

    friend LinForm operator+(LinForm a, const LinForm& b) { a += b; return a; }
    friend LinForm operator-(LinForm a, const LinForm& b) { a -= b; return a; }
    friend LinForm operator*(LinForm a, const Rational& s) { a *= s; return a; }
    friend LinForm operator*(const Rational& s, LinForm a) { a *= s; return a; }

    friend bool operator==(const LinForm& a, const LinForm& b) {
        return a.constant_ == b.constant_ && a.terms_ == b.terms_;
    }

    // Every unknown of this form must be present in the assignment.
    Rational evaluate(const std::map<UnknownId, Rational>& assignment) const {
        Rational acc = constant_;
        for (const auto& [id, c] : terms_) {
            auto it = assignment.find(id);
            require_input(it != assignment.end(), "missing assignment for " + id.str());
            acc += c * it->second;
        }
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [id, c] : terms_) {
            std::string mag = (c == Rational(1) || c == Rational(-1))
                                  ? id.str()
                                  : (c.sign() < 0 ? (-c).str() : c.str()) + "*" + id.str();
            if (first) {
                s += (c.sign() < 0 ? "-" : "") + mag;
                first = false;
            } else {
                s += (c.sign() < 0 ? " - " : " + ") + mag;
            }
        }
        if (!constant_.is_zero()) {
            if (first) return constant_.str();
            s += (constant_.sign() < 0 ? " - " + (-constant_).str() : " + " + constant_.str());
        }
        return s;
    }

private:
    void add_term(const UnknownId& id, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(id, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<UnknownId, Rational> terms_;
    Rational constant_ = Rational(0);
};

} // namespace addfeq
