#ifndef ORDPOLY_BERNOULLI_HPP
#define ORDPOLY_BERNOULLI_HPP

#include <mutex>
#include <vector>

#include "ordpoly/polynomial.hpp"
#include "ordpoly/rational.hpp"

namespace ordpoly {

// Convention trap: B_n here is B_n(1), the Bernoulli polynomial at 1, so
// B_1 = +1/2. Many references use B_n(0), which flips the sign of B_1.
// Everything in this project (in particular the Q_k coefficient formula)
// depends on the +1/2 convention.

/// Grow-only cache of Bernoulli numbers B_0, B_1, ... under the B_1 = +1/2
/// convention. Thread-safe; values are computed at most once.
class BernoulliTable {
public:
    Rational number(unsigned n) const;

private:
    void ensure(unsigned n) const;
    mutable std::mutex mutex_;
    mutable std::vector<Rational> values_;
};

/// B_n with B_1 = +1/2, from the shared process-wide table.
Rational bernoulli_number(unsigned n);

/// The Bernoulli polynomial B_k(x); satisfies B_k(1) = bernoulli_number(k).
Polynomial bernoulli_polynomial(unsigned k);

/// 1^n + 2^n + ... + t^n via the Bernoulli power-sum formula.
Integer power_sum(unsigned n, unsigned long t);

/// The degree-(n+1) polynomial p with p(t) = 1^n + ... + t^n; p(0) = 0.
Polynomial power_sum_polynomial(unsigned n);

/// B_{2n} from B_2..B_{2n-2} alone, via the even-index convolution
/// recurrence. Independent cross-check of the table; requires n >= 2.
Rational bernoulli_even_recurrence(unsigned n);

/// True iff B_k + k < 0 (exactly). Equivalent to k >= 20 and 4 | k.
bool bk_plus_k_is_negative(unsigned k);

} // namespace ordpoly

#endif
