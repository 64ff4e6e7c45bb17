#pragma once

#include <functional>
#include <vector>

#include "orderpoly/rational.hpp"
#include "orderpoly/unipoly.hpp"

namespace orderpoly {

/// b[n] = B_n(0) and B[n], n = 0..N.
struct BernoulliTable {
    std::vector<Rational> b;
    std::vector<UniPoly> B;
};

/// Reference values from the generating function x/(e^x - 1):
/// sum_{k=0}^{n} binom(n+1, k) b_k = 0 for n >= 1, b_0 = 1, and
/// B_n(t) = sum_k binom(n, k) b_k t^{n-k}.
BernoulliTable bernoulli_numbers_oracle(unsigned max_n);

/// Calls visit(parts) for every composition of n into positive parts.
void for_each_composition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit);

/// phi of the strictly labeled shrub S_n (n >= 1).
Rational bernoulli_from_shrub(unsigned n);

/// b_n = sum_k (-1)^k/(k+1) sum over compositions of n into k parts of the
/// multinomial coefficient.
Rational bernoulli_multinomial(unsigned n);

/// (n+1)! b_n evaluated in integer arithmetic from the same sum; every
/// summand (n+1)!/(k+1) * multinomial is an integer.
Integer bernoulli_scaled_numerator(unsigned n);

/// Order polynomial of the strictly labeled S_n equals the integral of B_n from 0 to t.
bool shrub_order_poly_check(unsigned n);

/// The two composition sums
///   sum_k (-1)^k/(k+1) sum 1/(n_1! ... n_k!)   and
///   sum_k (-1)^k       sum 1/((n_1+1)! ... (n_k+1)!)
struct CompositionSums {
    Rational factorial_weighted;
    Rational shifted_factorial_weighted;
};
CompositionSums composition_sums(unsigned n);

/// Both composition sums agree and n! times the second equals b_n.
bool composition_sum_identity_check(unsigned n);

/// Path counts of the strictly labeled shrub predicted by compositions:
/// c_1 = 0 and c_k = sum over compositions of n into k-1 parts of the
/// multinomial coefficient. Index k runs over 0..n+1.
std::vector<Integer> shrub_path_counts_formula(unsigned n);

} // namespace orderpoly
