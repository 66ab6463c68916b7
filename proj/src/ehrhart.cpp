#include "ordpoly/ehrhart.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ordpoly/bernoulli.hpp"

namespace ordpoly {

std::string to_string(EhrhartMethod m) {
    switch (m) {
        case EhrhartMethod::counting: return "counting";
        case EhrhartMethod::hstar: return "hstar";
        case EhrhartMethod::closed_form_qk: return "closed_form_qk";
        case EhrhartMethod::product: return "product";
    }
    return "?";
}

namespace {

// One zeta pass: replaces f(I) by sum over sub-ideals J of I of f(J).
// f lives on the full 2^n mask array but is zero off the ideal lattice,
// so a plain subset-sum transform followed by re-masking does it.
void zeta_pass(std::vector<Integer>& f, const std::vector<char>& is_ideal, int n) {
    for (int x = 0; x < n; ++x) {
        const std::uint64_t b = std::uint64_t{1} << x;
        for (std::uint64_t mask = 0; mask < f.size(); ++mask)
            if (mask & b) f[mask] += f[mask ^ b];
    }
    for (std::uint64_t mask = 0; mask < f.size(); ++mask)
        if (!is_ideal[mask]) f[mask] = 0;
}

// Multichain counts: values[t] = #(I_1 subseteq ... subseteq I_t) for
// t = 0..t_max, which equals the number of order-preserving maps P -> {0..t}.
std::vector<Integer> multichain_counts(const Poset& p, unsigned long t_max, int max_elements) {
    const auto ideals = order_ideals(p, max_elements);
    const int n = p.size();
    std::vector<Integer> values(t_max + 1);
    values[0] = 1;
    if (t_max == 0) return values;

    if (n == 0) {
        for (unsigned long t = 1; t <= t_max; ++t) values[t] = 1;
        return values;
    }
    std::vector<char> is_ideal(std::uint64_t{1} << n, 0);
    for (std::uint64_t ideal : ideals) is_ideal[ideal] = 1;
    std::vector<Integer> f(std::uint64_t{1} << n, 0);
    for (std::uint64_t ideal : ideals) f[ideal] = 1;

    for (unsigned long t = 1; t <= t_max; ++t) {
        if (t > 1) zeta_pass(f, is_ideal, n);
        Integer total = 0;
        for (std::uint64_t ideal : ideals) total += f[ideal];
        values[t] = total;
    }
    return values;
}

} // namespace

Integer count_points(const Poset& p, unsigned long t, int max_elements) {
    return multichain_counts(p, t, max_elements).back();
}

EhrhartPolynomial ehrhart_by_counting(const Poset& p, int max_elements) {
    const int n = p.size();
    const auto values = multichain_counts(p, static_cast<unsigned long>(n), max_elements);
    std::vector<std::pair<Integer, Rational>> points;
    points.reserve(n + 1);
    for (int t = 0; t <= n; ++t) points.emplace_back(Integer(t), Rational(values[t]));
    return {interpolate(points), n, EhrhartMethod::counting};
}

EhrhartPolynomial ehrhart_qk_closed_form(unsigned k) {
    std::vector<Rational> coeffs(k + 2);
    coeffs[0] = Rational(1);
    for (unsigned j = 1; j <= k; ++j) {
        const unsigned r = k - j + 1;
        coeffs[j] = (bernoulli_number(r) + Rational(static_cast<long>(r))) /
                    Rational(static_cast<long>(r)) * Rational(binomial(k, j));
    }
    coeffs[k + 1] = Rational(1, static_cast<long>(k) + 1);
    return {Polynomial(std::move(coeffs)), static_cast<int>(k) + 1,
            EhrhartMethod::closed_form_qk};
}

Rational qk_coefficient_raw(unsigned k, unsigned j) {
    if (j < 1 || j > k + 1)
        throw std::invalid_argument("qk_coefficient_raw: j must be in [1, k+1]");
    Rational acc(0);
    for (unsigned i = j - 1; i <= k; ++i)
        acc += Rational(binomial(i + 1, j)) * Rational(binomial(k + 1, static_cast<long>(i) + 1)) *
               bernoulli_number(k - i);
    return acc / Rational(static_cast<long>(k) + 1);
}

HStarVector hstar_from_ehrhart(const EhrhartPolynomial& e) {
    const int d = e.dim;
    if (e.poly.degree() != d) throw std::domain_error("hstar_from_ehrhart: degree != dim");
    // At t = m only the basis polynomials binom(t+d-i, d) with i <= m are
    // nonzero, so the system is triangular with unit diagonal.
    std::vector<Integer> h(d + 1);
    for (int m = 0; m <= d; ++m) {
        Rational rest = e.poly.eval(Rational(m));
        for (int i = 0; i < m; ++i)
            rest -= Rational(h[i]) * Rational(binomial(m + d - i, d));
        if (!rest.is_integer() || rest.sign() < 0)
            throw std::domain_error("hstar_from_ehrhart: entry h_" + std::to_string(m) +
                                    " = " + rest.str() + " is not a nonnegative integer");
        h[m] = rest.num();
    }
    if (h[0] != 1) throw std::domain_error("hstar_from_ehrhart: h_0 != 1");
    return {std::move(h)};
}

EhrhartPolynomial ehrhart_from_hstar(const HStarVector& h) {
    const int d = h.dim();
    if (d < 0 || h.h[0] != 1)
        throw std::invalid_argument("ehrhart_from_hstar: h_0 must be 1");
    Polynomial poly;
    for (int i = 0; i <= d; ++i) {
        if (h.h[i] < 0) throw std::invalid_argument("ehrhart_from_hstar: negative entry");
        if (h.h[i] == 0) continue;
        poly += Polynomial::constant(Rational(h.h[i])) * binomial_polynomial(d - i, d);
    }
    return {std::move(poly), d, EhrhartMethod::hstar};
}

HStarVector hstar_via_linear_extensions(const Poset& p, int max_elements) {
    const int n = p.size();
    if (n == 0) return {{Integer(1)}};
    // Fix a natural labeling from one reference extension, then histogram
    // descents of all extensions under that labeling.
    std::vector<int> label(n, -1);
    bool have_reference = false;
    std::vector<Integer> h(n + 1);
    for_each_linear_extension(
        p,
        [&](const std::vector<int>& ext) {
            if (!have_reference) {
                for (int i = 0; i < n; ++i) label[ext[i]] = i;
                have_reference = true;
            }
            int descents = 0;
            for (int i = 0; i + 1 < n; ++i)
                if (label[ext[i]] > label[ext[i + 1]]) ++descents;
            h[descents] += 1;
        },
        max_elements);
    return {std::move(h)};
}

HStarVector hstar_ordinal_sum(const HStarVector& hp, const HStarVector& hq) {
    std::vector<Integer> h(hp.h.size() + hq.h.size() - 1, Integer(0));
    for (std::size_t i = 0; i < hp.h.size(); ++i)
        for (std::size_t j = 0; j < hq.h.size(); ++j) h[i + j] += hp.h[i] * hq.h[j];
    return {std::move(h)};
}

HStarVector eulerian_polynomial(unsigned k, unsigned max_k) {
    if (k < 1) throw std::invalid_argument("eulerian_polynomial: k must be positive");
    if (k > max_k)
        throw std::invalid_argument("eulerian_polynomial: k exceeds bound " +
                                    std::to_string(max_k));
    // Eulerian triangle: A(m, j) = (j+1) A(m-1, j) + (m-j) A(m-1, j-1).
    std::vector<Integer> row{Integer(1)};
    for (unsigned m = 2; m <= k; ++m) {
        std::vector<Integer> next(m, Integer(0));
        for (unsigned j = 0; j < m; ++j) {
            if (j < row.size()) next[j] += Integer(static_cast<long>(j) + 1) * row[j];
            if (j >= 1 && j - 1 < row.size())
                next[j] += Integer(static_cast<long>(m - j)) * row[j - 1];
        }
        row = std::move(next);
    }
    row.resize(k + 1, Integer(0));  // h*-vector of the k-cube has k+1 entries
    return {std::move(row)};
}

EhrhartPolynomial ehrhart_pmn(unsigned m, unsigned n, unsigned max_k) {
    auto e = ehrhart_from_hstar(
        hstar_ordinal_sum(eulerian_polynomial(m, max_k), eulerian_polynomial(n, max_k)));
    e.method = EhrhartMethod::product;
    return e;
}

} // namespace ordpoly
