#include <doctest.h>

#include <random>

#include "ordpoly/bernoulli.hpp"
#include "ordpoly/ehrhart.hpp"

using namespace ordpoly;

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

// Brute-force oracle: enumerate all (t+1)^n maps P -> {0..t} and keep the
// order-preserving ones. Usable for n <= 5 and small t.
Integer count_maps_brute_force(const Poset& p, int t) {
    const int n = p.size();
    std::vector<int> f(n, 0);
    Integer count = 0;
    while (true) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (p.leq(a, b) && f[a] > f[b]) ok = false;
        if (ok) ++count;
        int i = 0;
        while (i < n && f[i] == t) f[i++] = 0;
        if (i == n) break;
        ++f[i];
    }
    return count;
}

Integer factorial(int n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

} // namespace

TEST_CASE("count_points on fixed posets") {
    CHECK(count_points(make_antichain(3), 2) == 27);
    CHECK(count_points(make_qk(2), 1) == 5);
    CHECK(count_points(make_antichain(0), 7) == 1);
    CHECK(count_points(make_chain(3), 0) == 1);
    Integer two20;
    mpz_ui_pow_ui(two20.get_mpz_t(), 2, 20);
    CHECK(count_points(make_qk(20), 1, 21) == 1 + two20);
    CHECK_THROWS_AS(count_points(make_qk(20), 1), std::invalid_argument);
}

TEST_CASE("count_points equals the brute-force map count") {
    for (int n = 0; n <= 5; ++n)
        for (const Poset& p : n == 0 ? std::vector<Poset>{Poset()} : enumerate_posets(n))
            for (int t = 0; t <= 3; ++t) CHECK(count_points(p, t) == count_maps_brute_force(p, t));
}

TEST_CASE("ehrhart_by_counting on fixed posets") {
    CHECK(ehrhart_by_counting(make_antichain(2)).poly == Polynomial({q(1), q(2), q(1)}));
    CHECK(ehrhart_by_counting(make_qk(1)).poly == Polynomial({q(1), q(3, 2), q(1, 2)}));
    CHECK(ehrhart_by_counting(make_chain(3)).poly ==
          Polynomial({q(1), q(11, 6), q(1), q(1, 6)}));
    CHECK(ehrhart_by_counting(Poset()).poly == Polynomial::constant(q(1)));
    CHECK(ehrhart_by_counting(make_qk(1)).method == EhrhartMethod::counting);
    CHECK(ehrhart_by_counting(make_qk(1)).dim == 2);
}

TEST_CASE("Q_k closed form") {
    CHECK(ehrhart_qk_closed_form(20).poly.coeff(1) == q(-168011, 330));
    CHECK(ehrhart_qk_closed_form(1).poly == Polynomial({q(1), q(3, 2), q(1, 2)}));
    CHECK(ehrhart_qk_closed_form(5).poly == ehrhart_by_counting(make_qk(5)).poly);
    CHECK(ehrhart_qk_closed_form(0).poly == Polynomial({q(1), q(1)}));
}

TEST_CASE("closed form evaluates to the power sum of the dilation") {
    for (unsigned k = 0; k <= 12; ++k) {
        const Polynomial p = ehrhart_qk_closed_form(k).poly;
        for (unsigned long t = 0; t <= 20; ++t) {
            Integer naive = 0;
            for (unsigned long i = 1; i <= t + 1; ++i) {
                Integer term;
                mpz_ui_pow_ui(term.get_mpz_t(), i, k);
                naive += term;
            }
            CHECK(p.eval(q(static_cast<long>(t))) == Rational(naive));
        }
    }
}

TEST_CASE("raw double-binomial coefficient sum") {
    for (unsigned k = 0; k <= 15; ++k) CHECK(qk_coefficient_raw(k, k + 1) ==
                                             q(1, static_cast<long>(k) + 1));
    CHECK(qk_coefficient_raw(20, 1) == q(-168011, 330));
    CHECK_THROWS_AS(qk_coefficient_raw(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(qk_coefficient_raw(5, 7), std::invalid_argument);

    // matches the closed form everywhere
    for (unsigned k = 0; k <= 12; ++k) {
        const Polynomial p = ehrhart_qk_closed_form(k).poly;
        for (unsigned j = 1; j <= k + 1; ++j) CHECK(qk_coefficient_raw(k, j) == p.coeff(j));
    }

    // the proof-internal recurrence a_{j+1}^{(k+1)} = ((k+1)/(j+1)) a_j^{(k)}
    for (unsigned k = 1; k <= 12; ++k)
        for (unsigned j = 1; j <= k + 1; ++j)
            CHECK(qk_coefficient_raw(k + 1, j + 1) ==
                  q(static_cast<long>(k) + 1, static_cast<long>(j) + 1) *
                      qk_coefficient_raw(k, j));
}

TEST_CASE("hstar_from_ehrhart") {
    const HStarVector h6 = hstar_from_ehrhart(ehrhart_by_counting(make_antichain(6)));
    CHECK(h6.h == std::vector<Integer>{1, 57, 302, 302, 57, 1, 0});

    for (int n = 1; n <= 6; ++n) {
        const HStarVector h = hstar_from_ehrhart(ehrhart_by_counting(make_chain(n)));
        std::vector<Integer> expected(n + 1, Integer(0));
        expected[0] = 1;
        CHECK(h.h == expected);
    }

    // a polynomial that is not an Ehrhart polynomial of an order polytope
    EhrhartPolynomial bogus{Polynomial({q(1), q(1, 3), q(1, 3)}), 2, EhrhartMethod::counting};
    CHECK_THROWS_AS(hstar_from_ehrhart(bogus), std::domain_error);
}

TEST_CASE("ehrhart_from_hstar") {
    CHECK(ehrhart_from_hstar({{Integer(1), Integer(0), Integer(0)}}).poly ==
          binomial_polynomial(2, 2));
    CHECK(ehrhart_from_hstar({{Integer(1), Integer(1)}}).poly == Polynomial({q(1), q(2)}));
    CHECK(ehrhart_from_hstar({{Integer(1), Integer(1)}}).method == EhrhartMethod::hstar);
}

TEST_CASE("h* round-trips through the Ehrhart polynomial") {
    for (int n = 1; n <= 5; ++n)
        for (const Poset& p : enumerate_posets(n)) {
            const EhrhartPolynomial e = ehrhart_by_counting(p);
            const HStarVector h = hstar_from_ehrhart(e);
            CHECK(ehrhart_from_hstar(h).poly == e.poly);
        }
}

TEST_CASE("h* via linear extensions") {
    CHECK(hstar_via_linear_extensions(make_antichain(7)).h ==
          std::vector<Integer>{1, 120, 1191, 2416, 1191, 120, 1, 0});
    for (int k = 1; k <= 6; ++k) {
        std::vector<Integer> expected(k + 1, Integer(0));
        expected[0] = 1;
        CHECK(hstar_via_linear_extensions(make_chain(k)).h == expected);
    }
}

TEST_CASE("cross-method h* equality on all small posets") {
    for (int n = 1; n <= 5; ++n)
        for (const Poset& p : enumerate_posets(n))
            CHECK(hstar_via_linear_extensions(p).h ==
                  hstar_from_ehrhart(ehrhart_by_counting(p)).h);
}

TEST_CASE("h* invariants on all small posets") {
    for (int n = 1; n <= 5; ++n)
        for (const Poset& p : enumerate_posets(n)) {
            const HStarVector h = hstar_via_linear_extensions(p);
            CHECK(h.dim() == n);
            CHECK(h.h[0] == 1);
            Integer sum = 0;
            for (const auto& v : h.h) {
                CHECK(v >= 0);
                sum += v;
            }
            CHECK(sum == count_linear_extensions(p));
        }
}

TEST_CASE("ordinal-sum h* product") {
    const HStarVector a6 = eulerian_polynomial(6), a7 = eulerian_polynomial(7);
    CHECK(ehrhart_from_hstar(hstar_ordinal_sum(a6, a7)).poly.coeff(1) == q(61751, 15015));
    CHECK(ehrhart_from_hstar(hstar_ordinal_sum(a7, a7)).poly.coeff(1) == q(-3041, 1430));

    // the empty poset's h* = (1) is the identity
    const HStarVector identity{{Integer(1)}};
    CHECK(hstar_ordinal_sum(a6, identity).h == a6.h);
}

TEST_CASE("Lemma: h* of an ordinal sum is the product of the parts") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> size(1, 4);
    for (int trial = 0; trial < 15; ++trial) {
        const auto classes_p = enumerate_posets(size(rng));
        const auto classes_q = enumerate_posets(size(rng));
        const Poset& p = classes_p[rng() % classes_p.size()];
        const Poset& qq = classes_q[rng() % classes_q.size()];
        CHECK(hstar_from_ehrhart(ehrhart_by_counting(ordinal_sum(p, qq))).h ==
              hstar_ordinal_sum(hstar_from_ehrhart(ehrhart_by_counting(p)),
                                hstar_from_ehrhart(ehrhart_by_counting(qq)))
                  .h);
    }
}

TEST_CASE("Eulerian polynomials") {
    CHECK(eulerian_polynomial(1).h == std::vector<Integer>{1, 0});
    CHECK(eulerian_polynomial(8).h ==
          std::vector<Integer>{1, 247, 4293, 15619, 15619, 4293, 247, 1, 0});
    CHECK(eulerian_polynomial(10).h ==
          std::vector<Integer>{1, 1013, 47840, 455192, 1310354, 1310354, 455192, 47840, 1013, 1,
                               0});
    CHECK_THROWS_AS(eulerian_polynomial(13), std::invalid_argument);

    // triangle recurrence vs descent counting over the cube's extensions
    for (int k = 1; k <= 7; ++k)
        CHECK(eulerian_polynomial(k).h == hstar_via_linear_extensions(make_antichain(k)).h);
}

TEST_CASE("ehrhart_pmn spot values") {
    CHECK(ehrhart_pmn(10, 10).poly.coeff(1) == q(-135276175, 58786));
    CHECK(ehrhart_pmn(9, 10).poly.coeff(3) == q(-454951, 12155));
    CHECK(ehrhart_pmn(6, 6).poly.coeff(12) == q(1, 924));
    CHECK(ehrhart_pmn(6, 6).method == EhrhartMethod::product);
}

TEST_CASE("Q_k triple agreement") {
    for (unsigned k = 1; k <= 8; ++k) {
        const Polynomial closed = ehrhart_qk_closed_form(k).poly;
        CHECK(closed == ehrhart_by_counting(make_qk(static_cast<int>(k))).poly);
        CHECK(closed == ehrhart_pmn(k, 1).poly);
    }
}

TEST_CASE("Ehrhart structural invariants on all small posets") {
    for (int n = 1; n <= 5; ++n)
        for (const Poset& p : enumerate_posets(n)) {
            const EhrhartPolynomial e = ehrhart_by_counting(p);
            CHECK(e.poly.degree() == n);
            CHECK(e.poly.coeff(0) == q(1));
            CHECK(e.poly.coeff(n).sign() > 0);
            CHECK(e.poly.coeff(n - 1).sign() > 0);
            // leading coefficient is (#linear extensions) / n!
            CHECK(e.poly.coeff(n) ==
                  Rational(Integer(count_linear_extensions(p)), factorial(n)));
            // i(O_P, 1) counts the order ideals
            CHECK(e.poly.eval(q(1)) == Rational(Integer(order_ideals(p).size())));
        }
}
