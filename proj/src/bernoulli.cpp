#include "ordpoly/bernoulli.hpp"

#include <stdexcept>

namespace ordpoly {

// Defining recurrence: the power-sum identity at t = 1,
//   sum_{i=0}^{n} binom(n+1, i+1) B_{n-i} = n + 1,
// whose i = 0 term isolates (n+1) B_n. This bakes in B_1 = +1/2 directly.
void BernoulliTable::ensure(unsigned n) const {
    if (values_.size() > n) return;
    if (values_.empty()) values_.push_back(Rational(1));  // B_0
    for (unsigned m = static_cast<unsigned>(values_.size()); m <= n; ++m) {
        Rational acc(static_cast<long>(m) + 1);
        for (unsigned i = 1; i <= m; ++i)
            acc -= Rational(binomial(m + 1, static_cast<long>(i) + 1)) * values_[m - i];
        values_.push_back(acc / Rational(static_cast<long>(m) + 1));
    }
}

Rational BernoulliTable::number(unsigned n) const {
    std::lock_guard<std::mutex> lock(mutex_);
    ensure(n);
    return values_[n];
}

Rational bernoulli_number(unsigned n) {
    static const BernoulliTable table;
    return table.number(n);
}

Polynomial bernoulli_polynomial(unsigned k) {
    // B_k(x) = sum_i binom(k, i) B_{k-i}(0) x^i, where B_j(0) = B_j - [j = 1]
    // (the shift is forced by B_j(1) = B_j(0) + j * 0^{j-1} at j = 1).
    std::vector<Rational> coeffs(k + 1);
    for (unsigned i = 0; i <= k; ++i) {
        Rational b0 = bernoulli_number(k - i);
        if (k - i == 1) b0 -= Rational(1);
        coeffs[i] = Rational(binomial(k, i)) * b0;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial power_sum_polynomial(unsigned n) {
    // sum_{i=1}^{t} i^n = (1/(n+1)) sum_{i=0}^{n} binom(n+1, i+1) B_{n-i} t^{i+1}
    std::vector<Rational> coeffs(n + 2);
    const Rational scale(1, static_cast<long>(n) + 1);
    for (unsigned i = 0; i <= n; ++i)
        coeffs[i + 1] = scale * Rational(binomial(n + 1, static_cast<long>(i) + 1)) *
                        bernoulli_number(n - i);
    return Polynomial(std::move(coeffs));
}

Integer power_sum(unsigned n, unsigned long t) {
    Rational v = power_sum_polynomial(n).eval(Rational(static_cast<long>(t)));
    if (!v.is_integer()) throw std::logic_error("power_sum: non-integer result");
    return v.num();
}

Rational bernoulli_even_recurrence(unsigned n) {
    if (n < 2) throw std::invalid_argument("bernoulli_even_recurrence: requires n >= 2");
    Rational acc(0);
    for (unsigned j = 1; j <= n - 1; ++j)
        acc += Rational(binomial(2 * n, 2 * static_cast<long>(j))) * bernoulli_number(2 * j) *
               bernoulli_number(2 * (n - j));
    return acc / Rational(-(2 * static_cast<long>(n) + 1));
}

bool bk_plus_k_is_negative(unsigned k) {
    return bernoulli_number(k) + Rational(static_cast<long>(k)) < Rational(0);
}

} // namespace ordpoly
