#include "orderpoly/eulerian.hpp"

#include <stdexcept>
#include <string>

#include "orderpoly/omega_graph.hpp"

namespace orderpoly {

namespace {

const std::string kLambda = "lambda";

UniPoly lambda_poly()
{
    return UniPoly::identity(kLambda);
}

UniPoly one_minus_lambda_pow(unsigned k)
{
    return one_minus(kLambda).pow(k);
}

UniPoly eulerian_recursive_impl(const LabeledPoset& lp, PolyMemo& memo)
{
    if (lp.size() == 0) {
        return UniPoly::constant(1, kLambda);
    }
    const std::string key = labeled_key(lp);
    if (auto hit = memo.find(key)) {
        return *hit;
    }
    UniPoly sum({}, kLambda);
    for (auto s : omega_natural_ideals(lp)) {
        if (s.empty()) {
            continue;
        }
        sum += one_minus_lambda_pow(static_cast<unsigned>(s.size() - 1))
               * eulerian_recursive_impl(induced_subposet(lp, lp.poset().elements() - s), memo);
    }
    UniPoly result = lambda_poly() * sum;
    memo.insert(key, result);
    return result;
}

LocalizedRatio e_tilde_recursive_impl(const LabeledPoset& lp, LocalizedMemo& memo)
{
    if (lp.size() == 0) {
        return LocalizedRatio(UniPoly::constant(1, kLambda), 1);
    }
    const std::string key = labeled_key(lp);
    if (auto hit = memo.find(key)) {
        return *hit;
    }
    LocalizedRatio sum;
    for (auto s : omega_natural_ideals(lp)) {
        if (s.empty()) {
            continue;
        }
        sum += e_tilde_recursive_impl(induced_subposet(lp, lp.poset().elements() - s), memo);
    }
    LocalizedRatio result = lambda_over_one_minus_lambda() * sum;
    memo.insert(key, result);
    return result;
}

// c(G; lambda/(1-lambda)) in the localized ring
LocalizedRatio substitute_mu(const UniPoly& chain_poly)
{
    LocalizedRatio total;
    LocalizedRatio power(UniPoly::constant(1, kLambda));
    const LocalizedRatio mu = lambda_over_one_minus_lambda();
    for (const auto& c : chain_poly.coefficients()) {
        total += power * c;
        power *= mu;
    }
    return total;
}

bool chain_identities_hold(const LabeledPoset& lp, const UniPoly& chain_poly)
{
    if (lp.size() == 0) {
        throw std::invalid_argument("chain polynomial identities require a nonempty poset");
    }
    const LocalizedRatio c_mu = substitute_mu(chain_poly);
    const LocalizedRatio e_tilde = LocalizedRatio(lambda_poly(), 2) * c_mu;
    const LocalizedRatio e_ratio
        = LocalizedRatio(lambda_poly() * one_minus_lambda_pow(static_cast<unsigned>(lp.size() - 1))) * c_mu;
    if (e_ratio.pole_order() != 0) {
        return false;
    }
    return e_tilde == e_tilde_recursive(lp) && e_ratio.to_polynomial() == eulerian_recursive(lp);
}

} // namespace

EulerianPair eulerian_from_chains(const LabeledPoset& lp)
{
    if (lp.size() == 0) {
        return {UniPoly::constant(1, kLambda), LocalizedRatio(UniPoly::constant(1, kLambda), 1)};
    }
    const PathCounts counts = count_paths(build_omega_graph(lp));
    const unsigned p = static_cast<unsigned>(lp.size());
    UniPoly e({}, kLambda);
    LocalizedRatio sum;
    const LocalizedRatio mu = lambda_over_one_minus_lambda();
    LocalizedRatio mu_power = mu;
    for (unsigned k = 1; k <= p; ++k) {
        const Rational ck(counts.c[k]);
        if (ck != 0) {
            e += UniPoly::monomial(ck, k, kLambda) * one_minus_lambda_pow(p - k);
            sum += mu_power * ck;
        }
        mu_power *= mu;
    }
    return {e, LocalizedRatio(UniPoly::constant(1, kLambda), 1) * sum};
}

UniPoly eulerian_recursive(const LabeledPoset& lp, PolyMemo* memo)
{
    PolyMemo local;
    return eulerian_recursive_impl(lp, memo ? *memo : local);
}

LocalizedRatio e_tilde_recursive(const LabeledPoset& lp, LocalizedMemo* memo)
{
    LocalizedMemo local;
    return e_tilde_recursive_impl(lp, memo ? *memo : local);
}

bool eulerian_series_check(const LabeledPoset& lp, unsigned max_degree)
{
    if (max_degree < lp.size() + 2) {
        throw std::invalid_argument("eulerian_series_check: truncation order must be at least |P| + 2");
    }
    const UniPoly omega = order_poly_recursive(lp);
    const EulerianPair pair = eulerian_from_chains(lp);
    const auto p = static_cast<unsigned>(lp.size());
    // e * sum_n binom(n + p, p) lambda^n, truncated
    std::vector<Rational> expansion(max_degree + 1);
    const auto& e = pair.e.coefficients();
    for (unsigned i = 0; i < e.size() && i <= max_degree; ++i) {
        for (unsigned n = 0; i + n <= max_degree; ++n) {
            expansion[i + n] += e[i] * Rational(binomial(n + p, p));
        }
    }
    for (unsigned n = 0; n <= max_degree; ++n) {
        if (omega.eval(n) != expansion[n]) {
            return false;
        }
    }
    // the localized form must expand identically
    return pair.e_tilde.series(max_degree) == expansion;
}

bool chain_polynomial_identity_check(const LabeledPoset& lp)
{
    return chain_identities_hold(lp, anchored_chain_polynomial(build_omega_graph(lp)));
}

bool chain_polynomial_identity_check_unanchored(const LabeledPoset& lp)
{
    return chain_identities_hold(lp, chain_polynomial(build_omega_graph(lp).open_graph()));
}

UniPoly antichain_eulerian_binomial(unsigned n)
{
    std::vector<UniPoly> a{UniPoly::constant(1, kLambda)};
    for (unsigned m = 1; m <= n; ++m) {
        UniPoly sum({}, kLambda);
        for (unsigned k = 1; k <= m; ++k) {
            sum += a[m - k] * one_minus_lambda_pow(k - 1) * Rational(binomial(m, k));
        }
        a.push_back(lambda_poly() * sum);
    }
    return a[n];
}

UniPoly antichain_eulerian_derivative(unsigned n)
{
    UniPoly a = UniPoly::constant(1, kLambda);
    const UniPoly lambda = lambda_poly();
    for (unsigned m = 1; m <= n; ++m) {
        a = lambda * one_minus(kLambda) * a.derivative() + lambda * a * Rational(m);
    }
    return a;
}

} // namespace orderpoly
