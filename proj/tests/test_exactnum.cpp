#include <doctest.h>

#include <random>

#include "ordpoly/polynomial.hpp"
#include "ordpoly/rational.hpp"

using namespace ordpoly;

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

// reference arithmetic by cross-multiplication on (num, den) pairs,
// independent of the Rational implementation
struct RawFrac {
    long long num, den;
};
RawFrac raw_add(RawFrac a, RawFrac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
RawFrac raw_sub(RawFrac a, RawFrac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
RawFrac raw_mul(RawFrac a, RawFrac b) { return {a.num * b.num, a.den * b.den}; }
bool raw_eq(RawFrac a, const Rational& r) {
    return Rational(a.num, a.den) == r;
}

} // namespace

TEST_CASE("rational arithmetic on spec examples") {
    CHECK(q(1, 6) + q(1, 3) == q(1, 2));
    CHECK(q(-174611, 330) + q(6600, 330) == q(-168011, 330));
    CHECK(q(2, 4) == q(1, 2));
    CHECK(q(2, 4).num() == 1);
    CHECK(q(2, 4).den() == 2);
}

TEST_CASE("rational invariants: reduced, positive denominator") {
    CHECK(q(4, -6).num() == -2);
    CHECK(q(4, -6).den() == 3);
    CHECK(q(0, 17).num() == 0);
    CHECK(q(0, 17).den() == 1);
}

TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(q(1, 2) / q(0), std::domain_error);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("arithmetic agrees with cross-multiplication oracle") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long long> nums(-50, 50);
    std::uniform_int_distribution<long long> dens(1, 50);
    for (int i = 0; i < 1000; ++i) {
        RawFrac a{nums(rng), dens(rng)}, b{nums(rng), dens(rng)};
        Rational ra(a.num, a.den), rb(b.num, b.den);
        CHECK(raw_eq(raw_add(a, b), ra + rb));
        CHECK(raw_eq(raw_sub(a, b), ra - rb));
        CHECK(raw_eq(raw_mul(a, b), ra * rb));
        if (b.num != 0) CHECK(raw_eq(raw_mul(a, {b.den, b.num}), ra / rb));
    }
}

TEST_CASE("rational serialization round-trips") {
    CHECK(q(-168011, 330).str() == "-168011/330");
    CHECK(q(7).str() == "7");
    CHECK(Rational::parse("-168011/330") == q(-168011, 330));
    CHECK(Rational::parse("5") == q(5));
    CHECK_THROWS(Rational::parse("not a number"));
}

TEST_CASE("binomial") {
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);

    for (unsigned long n = 1; n <= 30; ++n)
        for (long k = 0; k <= static_cast<long>(n); ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("polynomial arithmetic") {
    Polynomial one_plus_z({q(1), q(1)});
    CHECK((one_plus_z * one_plus_z) == Polynomial({q(1), q(2), q(1)}));
    CHECK((one_plus_z * Polynomial()).is_zero());
    CHECK((one_plus_z - one_plus_z).is_zero());
    CHECK((one_plus_z - one_plus_z).degree() == -1);

    Polynomial a2({q(1), q(1)});  // Eulerian A_2
    CHECK((a2 * a2) == Polynomial({q(1), q(2), q(1)}));
}

TEST_CASE("polynomial evaluation") {
    Polynomial p({q(1), q(3, 2), q(1, 2)});
    CHECK(p.eval(q(1)) == q(3));
    CHECK(p.eval(q(0)) == q(1));

    // high-degree terms against a repeated-squaring oracle
    Polynomial t20 = Polynomial::monomial(q(1), 20);
    Integer expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, 20);
    CHECK(t20.eval(q(2)) == Rational(expected));
    Polynomial mixed = t20 + Polynomial::monomial(q(3), 13) + Polynomial::constant(q(5));
    Integer p13;
    mpz_ui_pow_ui(p13.get_mpz_t(), 2, 13);
    CHECK(mixed.eval(q(2)) == Rational(expected + 3 * p13 + 5));
}

TEST_CASE("interpolation on spec examples") {
    CHECK(interpolate({{0, q(1)}, {1, q(3)}, {2, q(6)}}) ==
          Polynomial({q(1), q(3, 2), q(1, 2)}));
    CHECK(interpolate({{5, q(7)}}) == Polynomial::constant(q(7)));

    // samples of (t+1)^3 recover its binomial expansion
    std::vector<std::pair<Integer, Rational>> pts;
    for (long t = 0; t <= 3; ++t) pts.emplace_back(Integer(t), q((t + 1) * (t + 1) * (t + 1)));
    CHECK(interpolate(pts) == Polynomial({q(1), q(3), q(3), q(1)}));

    CHECK_THROWS_AS(interpolate({{1, q(1)}, {1, q(2)}}), std::invalid_argument);
    CHECK_THROWS_AS(interpolate({}), std::invalid_argument);
}

TEST_CASE("interpolate after sampling is the identity") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coeff_num(-9, 9);
    std::uniform_int_distribution<long> coeff_den(1, 9);
    std::uniform_int_distribution<int> deg(0, 10);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> coeffs(deg(rng) + 1);
        for (auto& c : coeffs) c = q(coeff_num(rng), coeff_den(rng));
        Polynomial p(coeffs);
        std::vector<std::pair<Integer, Rational>> pts;
        for (int t = 0; t <= p.degree() + 1; ++t)
            pts.emplace_back(Integer(t), p.eval(q(t)));
        if (pts.empty()) pts.emplace_back(Integer(0), q(0));
        CHECK(interpolate(pts) == p);
    }
}

TEST_CASE("binomial_polynomial") {
    CHECK(binomial_polynomial(0, 0) == Polynomial::constant(q(1)));
    CHECK(binomial_polynomial(1, 1) == Polynomial({q(1), q(1)}));

    for (long a = 0; a <= 12; ++a)
        for (unsigned d = 0; d <= 12; ++d) {
            Polynomial p = binomial_polynomial(a, d);
            for (long t = 0; t <= 20; ++t)
                CHECK(p.eval(q(t)) == Rational(binomial(t + a, d)));
        }
}

TEST_CASE("binomial basis sums against a brute-force cube count") {
    // i(square, t) = (t+1)^2 has h* = (1, 1, 0); check the basis plumbing
    Polynomial sum = binomial_polynomial(2, 2) + binomial_polynomial(1, 2);
    CHECK(sum == Polynomial({q(1), q(2), q(1)}));
}
