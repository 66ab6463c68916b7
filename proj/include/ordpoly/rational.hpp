#ifndef ORDPOLY_RATIONAL_HPP
#define ORDPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ordpoly {

using Integer = mpz_class;

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(n) {}
    Rational(const Integer& n) : value_(n) {}

    Rational(const Integer& num, const Integer& den) : value_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    const Integer num() const { return value_.get_num(); }
    const Integer den() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const {
        Rational r = *this;
        r.value_ = -r.value_;
        return r;
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// "num/den", denominator omitted when 1, sign on the numerator.
    std::string str() const { return value_.get_str(); }

    static Rational parse(const std::string& s);

private:
    mpq_class value_;
};

/// binom(n, k), exact; 0 when k < 0 or k > n.
Integer binomial(unsigned long n, long k);

} // namespace ordpoly

#endif
