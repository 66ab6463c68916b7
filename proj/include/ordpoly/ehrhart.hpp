#ifndef ORDPOLY_EHRHART_HPP
#define ORDPOLY_EHRHART_HPP

#include <string>
#include <vector>

#include "ordpoly/polynomial.hpp"
#include "ordpoly/poset.hpp"
#include "ordpoly/rational.hpp"

namespace ordpoly {

enum class EhrhartMethod { counting, hstar, closed_form_qk, product };

std::string to_string(EhrhartMethod m);

/// i(O_P, t): degree equals |P|, constant term 1, the top two coefficients
/// positive. The tag records which computation produced it.
struct EhrhartPolynomial {
    Polynomial poly;
    int dim = 0;
    EhrhartMethod method = EhrhartMethod::counting;
};

/// h*-vector h_0..h_dim: h_0 = 1, entries nonnegative, summing to the number
/// of linear extensions of the underlying poset.
struct HStarVector {
    std::vector<Integer> h;  // size dim + 1
    int dim() const { return static_cast<int>(h.size()) - 1; }
};

/// Number of order-preserving maps P -> {0..t}, i.e. lattice points of the
/// t-th dilation of O_P. Computed as length-t multichains in the ideal
/// lattice via zeta-transform passes over subset masks.
Integer count_points(const Poset& p, unsigned long t, int max_elements = 20);

/// Interpolates count_points at t = 0..n. Tag: counting.
EhrhartPolynomial ehrhart_by_counting(const Poset& p, int max_elements = 20);

/// i(O_{Q_k}, t) as the explicit Bernoulli-number formula:
/// 1 + sum_j ((B_{k-j+1} + (k-j+1)) / (k-j+1)) binom(k, j) t^j + t^{k+1}/(k+1).
EhrhartPolynomial ehrhart_qk_closed_form(unsigned k);

/// Coefficient of t^j in i(O_{Q_k}, t) by the unsimplified double-binomial
/// sum (1/(k+1)) sum_{i=j-1}^{k} binom(i+1, j) binom(k+1, i+1) B_{k-i}.
/// Independent route to the closed form; requires 1 <= j <= k+1.
Rational qk_coefficient_raw(unsigned k, unsigned j);

/// Inverts i(P,t) = sum_i h_i binom(t+d-i, d) by triangular back-substitution
/// at t = 0..d. Throws std::domain_error if any entry comes out negative or
/// non-integer (the input was not an order-polytope Ehrhart polynomial).
HStarVector hstar_from_ehrhart(const EhrhartPolynomial& e);

/// sum_i h_i binom(t+d-i, d). Tag: hstar.
EhrhartPolynomial ehrhart_from_hstar(const HStarVector& h);

/// Descent histogram over all linear extensions, labels fixed by one
/// reference extension. Independent oracle for the h*-vector.
HStarVector hstar_via_linear_extensions(const Poset& p, int max_elements = 12);

/// h* of an ordinal sum is the product of the parts' h*-polynomials.
HStarVector hstar_ordinal_sum(const HStarVector& hp, const HStarVector& hq);

/// Eulerian polynomial A_k(z) as the h*-vector of the k-cube (h_k = 0 for
/// k >= 2). Triangle recurrence; the descent-count definition is checked
/// against it in tests.
HStarVector eulerian_polynomial(unsigned k, unsigned max_k = 12);

/// i(O_{P_{m,n}}, t) from h* = A_m * A_n. Tag: product.
EhrhartPolynomial ehrhart_pmn(unsigned m, unsigned n, unsigned max_k = 12);

} // namespace ordpoly

#endif
