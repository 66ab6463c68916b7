#include "ordpoly/polynomial.hpp"

#include <set>
#include <stdexcept>

namespace ordpoly {

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t d) {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> v(d + 1);
    v[d] = c;
    return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

Polynomial interpolate(const std::vector<std::pair<Integer, Rational>>& points) {
    if (points.empty()) throw std::invalid_argument("interpolate: no points");
    std::set<Integer> seen;
    for (const auto& [x, y] : points)
        if (!seen.insert(x).second)
            throw std::invalid_argument("interpolate: duplicate abscissa " + x.get_str());

    // Newton divided differences, then expansion of the Newton form.
    const std::size_t m = points.size();
    std::vector<Rational> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - level].first);

    Polynomial result;
    Polynomial basis = Polynomial::constant(1);
    for (std::size_t i = 0; i < m; ++i) {
        result += Polynomial::constant(dd[i]) * basis;
        basis *= Polynomial({Rational(Integer(-points[i].first)), Rational(1)});
    }
    return result;
}

Polynomial binomial_polynomial(long a, unsigned d) {
    Polynomial result = Polynomial::constant(1);
    for (unsigned s = 1; s <= d; ++s)
        result *= Polynomial({Rational(a - static_cast<long>(d) + static_cast<long>(s)), Rational(1)});
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), d);
    return result * Polynomial::constant(Rational(1, fact));
}

} // namespace ordpoly
