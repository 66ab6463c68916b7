#ifndef ORDPOLY_POLYNOMIAL_HPP
#define ORDPOLY_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "ordpoly/rational.hpp"

namespace ordpoly {

/// Dense univariate polynomial over Rational. Coefficient index = degree;
/// trailing zeros are trimmed, so the zero polynomial stores no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    /// The monomial c * x^d.
    static Polynomial monomial(const Rational& c, std::size_t d);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^d (0 beyond the stored degree).
    Rational coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Rational(0); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Rational eval(const Rational& x) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Unique polynomial of degree < points.size() through the given points,
/// by exact Newton divided differences. Abscissae must be pairwise distinct.
Polynomial interpolate(const std::vector<std::pair<Integer, Rational>>& points);

/// binom(t + a, d) expanded as a degree-d polynomial in t:
/// prod_{s=1}^{d} (t + a - d + s) / d!.
Polynomial binomial_polynomial(long a, unsigned d);

} // namespace ordpoly

#endif
