#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace orderpoly {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    /// Number of individual comparisons made.
    std::size_t cases = 0;
    /// Empty on success; otherwise describes the first failure.
    std::string detail;
    double seconds = 0;
};

// Cross-validation checks. Each size parameter bounds the poset catalog used.

/// Brute force, matrix and recursive order polynomials agree on the sampled
/// labeled catalog (natural, reversed and three random labelings per poset).
CriterionResult check_order_poly_routes(std::size_t max_size = 5);
/// Chain and recursive Eulerian polynomials agree; generating-series check
/// with M = 2|P| + 2.
CriterionResult check_eulerian_routes(std::size_t max_size = 5);
/// phi of strict shrubs against generating-function Bernoulli numbers,
/// multinomial closed form, integrality of (n+1)! b_n, shrub order polynomials.
CriterionResult check_bernoulli(unsigned shrub_max = 12, unsigned closed_form_max = 15,
                                unsigned integrality_max = 20, unsigned integral_max = 8);
/// The two composition sums agree and reproduce b_n.
CriterionResult check_composition_sums(unsigned max_n = 15);
/// Both antichain Eulerian recursions and the chain route agree; A_n(1) = n!.
CriterionResult check_antichain_eulerian(unsigned max_n = 10);
/// Convolution, phi flag recursion, reconstruction from phi and the
/// derivative formula on the exhaustive labeled catalog.
CriterionResult check_structural_identities(std::size_t max_size = 4, std::size_t convolution_max_size = 5);
/// Chain-polynomial identities for e and e~.
CriterionResult check_chain_polynomials(std::size_t max_size = 5);
/// Generic recursion reproduces Omega, e~, e and K; operator linearity.
CriterionResult check_framework(std::size_t max_size = 4, std::size_t linearity_samples = 100);
/// Quasi-symmetry and specialization of K in up to max_vars variables.
CriterionResult check_qsym(std::size_t max_size = 4, std::size_t max_vars = 5);
/// Unlabeled recursions against labeled routes, reciprocity, values at 1 and -1.
CriterionResult check_unlabeled(std::size_t max_size = 5, std::size_t reciprocity_max_size = 6);
/// Theta(n) == (I + A)^n for n <= max_power.
CriterionResult check_exp_log(std::size_t max_size = 5, unsigned max_power = 5);

/// Criteria 1-11 with every catalog size capped at max_size.
std::vector<CriterionResult> run_check_suite(std::size_t max_size);

} // namespace orderpoly
