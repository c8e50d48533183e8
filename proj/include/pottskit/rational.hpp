#ifndef POTTSKIT_RATIONAL_HPP
#define POTTSKIT_RATIONAL_HPP

// Exact rational arithmetic on top of GMP. Every identity in this library
// is checked in this field, so the invariants (reduced form, positive
// denominator) are maintained by construction.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pottskit {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    // Accepts "p", "p/q", and leading '-'.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                return Rational(mpq_class(mpz_class(s)));
            }
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            if (den == 0) throw std::domain_error("Rational: zero denominator");
            mpq_class q;
            q = mpq_class(num) / mpq_class(den);
            return Rational(q);
        } catch (const std::invalid_argument&) {
            throw std::domain_error("Rational: cannot parse '" + s + "'");
        }
    }

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(long k) const {
        if (k < 0) {
            if (is_zero()) throw std::domain_error("Rational: 0^negative");
            return Rational(1) / pow(-k);
        }
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(k));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(k));
        mpq_class r(n);
        r /= mpq_class(d);
        return Rational(r);
    }

    double to_double() const { return v_.get_d(); }

    // Rendered "p" for integers, "p/q" otherwise.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

inline Rational rational_pow(const Rational& b, long k) { return b.pow(k); }

// Integer power n^k for scalar templates that mix Rational and double code paths.
inline Rational scalar_from_int(long n, const Rational&) { return Rational(n); }
inline double scalar_from_int(long n, const double&) { return static_cast<double>(n); }

} // namespace pottskit

#endif
