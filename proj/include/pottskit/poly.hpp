#ifndef POTTSKIT_POLY_HPP
#define POTTSKIT_POLY_HPP

// Exact univariate and bivariate polynomials over Rational.
// UniPoly is dense (degrees stay small, bounded by edge counts),
// BiPoly is a sparse map keyed by (deg_x, deg_y).

#include "pottskit/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pottskit {

class UniPoly {
public:
    UniPoly() = default;
    UniPoly(Rational c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly variable() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static UniPoly monomial(int deg, Rational c) {
        std::vector<Rational> v(deg + 1, Rational(0));
        v[deg] = std::move(c);
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero poly
    Rational coeff(int d) const {
        if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[d];
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly& operator+=(const UniPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(out));
    }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly pow(int k) const {
        UniPoly r = UniPoly(Rational(1));
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    // Composition p(q(x)).
    UniPoly substitute(const UniPoly& q) const {
        UniPoly acc;
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * q + UniPoly(coeffs_[i]);
        return acc;
    }

    std::string str(const std::string& var = "n") const {
        if (is_zero()) return "0";
        std::string out;
        for (int d = degree(); d >= 0; --d) {
            const Rational& c = coeffs_[d];
            if (c.is_zero()) continue;
            bool neg = c.sign() < 0;
            Rational a = neg ? -c : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono;
            if (d == 0) {
                mono = a.str();
            } else {
                std::string xs = d == 1 ? var : var + "^" + std::to_string(d);
                mono = (a == Rational(1)) ? xs : a.str() + "*" + xs;
            }
            out += mono;
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_; // coeffs_[d] = coefficient of x^d
};

class BiPoly {
public:
    using Key = std::pair<int, int>; // (deg_x, deg_y)

    BiPoly() = default;
    BiPoly(Rational c) { add_term(0, 0, std::move(c)); }

    static BiPoly var_x() { return monomial(1, 0, Rational(1)); }
    static BiPoly var_y() { return monomial(0, 1, Rational(1)); }
    static BiPoly monomial(int dx, int dy, Rational c) {
        BiPoly p;
        p.add_term(dx, dy, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coeff(int dx, int dy) const {
        auto it = terms_.find({dx, dy});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(int dx, int dy, Rational c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(Key{dx, dy}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return out;
    }
    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly pow(int k) const {
        BiPoly r(Rational(1));
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    Rational evaluate(const Rational& x, const Rational& y) const {
        Rational acc(0);
        for (const auto& [k, c] : terms_) acc += c * x.pow(k.first) * y.pow(k.second);
        return acc;
    }

    // Substitute polynomials for both variables; result lives in the
    // variable of the arguments.
    UniPoly substitute(const UniPoly& x, const UniPoly& y) const {
        UniPoly acc;
        for (const auto& [k, c] : terms_)
            acc += UniPoly(c) * x.pow(k.first) * y.pow(k.second);
        return acc;
    }

    // Partial substitution y := value, keeping x symbolic.
    BiPoly substitute_y(const Rational& y) const {
        BiPoly out;
        for (const auto& [k, c] : terms_) out.add_term(k.first, 0, c * y.pow(k.second));
        return out;
    }
    BiPoly substitute_x(const Rational& x) const {
        BiPoly out;
        for (const auto& [k, c] : terms_) out.add_term(0, k.second, c * x.pow(k.first));
        return out;
    }

    std::string str(const std::string& xv = "x", const std::string& yv = "y") const {
        if (is_zero()) return "0";
        // Descending total degree, then descending x-degree.
        std::vector<std::pair<Key, Rational>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
            if (ta != tb) return ta > tb;
            return a.first.first > b.first.first;
        });
        std::string out;
        for (const auto& [k, c] : ts) {
            bool neg = c.sign() < 0;
            Rational a = neg ? -c : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono;
            auto var_pow = [](const std::string& v, int d) {
                return d == 1 ? v : v + "^" + std::to_string(d);
            };
            if (k.first == 0 && k.second == 0) {
                mono = a.str();
            } else {
                std::string vars;
                if (k.first > 0) vars = var_pow(xv, k.first);
                if (k.second > 0) {
                    if (!vars.empty()) vars += "*";
                    vars += var_pow(yv, k.second);
                }
                mono = (a == Rational(1)) ? vars : a.str() + "*" + vars;
            }
            out += mono;
        }
        return out;
    }

private:
    std::map<Key, Rational> terms_;
};

} // namespace pottskit

#endif
