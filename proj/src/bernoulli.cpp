#include "orderpoly/bernoulli.hpp"

#include <stdexcept>

#include "orderpoly/omega_graph.hpp"
#include "orderpoly/order_poly.hpp"
#include "orderpoly/poset.hpp"

namespace orderpoly {

namespace {

void require_positive(unsigned n, const char* what)
{
    if (n == 0) {
        throw std::invalid_argument(std::string(what) + ": n must be at least 1");
    }
}

LabeledPoset strict_shrub(unsigned n)
{
    Poset shrub = make_shrub(n);
    Labeling omega = reversed_labeling(shrub);
    return LabeledPoset(std::move(shrub), std::move(omega));
}

Integer multinomial(unsigned n, const std::vector<unsigned>& parts)
{
    Integer r = factorial(n);
    for (auto part : parts) {
        r /= factorial(part);
    }
    return r;
}

void compositions_rec(unsigned remaining, std::vector<unsigned>& parts,
                      const std::function<void(const std::vector<unsigned>&)>& visit)
{
    if (remaining == 0) {
        visit(parts);
        return;
    }
    for (unsigned first = 1; first <= remaining; ++first) {
        parts.push_back(first);
        compositions_rec(remaining - first, parts, visit);
        parts.pop_back();
    }
}

// multinomial sums per number of parts, index k = 0..n
std::vector<Integer> multinomial_sums(unsigned n)
{
    std::vector<Integer> sums(n + 1);
    for_each_composition(n, [&](const std::vector<unsigned>& parts) {
        sums[parts.size()] += multinomial(n, parts);
    });
    return sums;
}

} // namespace

BernoulliTable bernoulli_numbers_oracle(unsigned max_n)
{
    BernoulliTable table;
    table.b.push_back(1);
    for (unsigned n = 1; n <= max_n; ++n) {
        // binom(n+1, n) b_n = -sum_{k<n} binom(n+1, k) b_k
        Rational acc = 0;
        for (unsigned k = 0; k < n; ++k) {
            acc += Rational(binomial(n + 1, k)) * table.b[k];
        }
        table.b.push_back(-acc / Rational(n + 1));
    }
    for (unsigned n = 0; n <= max_n; ++n) {
        std::vector<Rational> coeffs(n + 1);
        for (unsigned k = 0; k <= n; ++k) {
            coeffs[n - k] = Rational(binomial(n, k)) * table.b[k];
        }
        table.B.emplace_back(std::move(coeffs));
    }
    return table;
}

void for_each_composition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit)
{
    std::vector<unsigned> parts;
    compositions_rec(n, parts, visit);
}

Rational bernoulli_from_shrub(unsigned n)
{
    require_positive(n, "bernoulli_from_shrub");
    return phi(strict_shrub(n));
}

Rational bernoulli_multinomial(unsigned n)
{
    require_positive(n, "bernoulli_multinomial");
    const auto sums = multinomial_sums(n);
    Rational b = 0;
    for (unsigned k = 1; k <= n; ++k) {
        const Rational term = Rational(sums[k]) / Rational(k + 1);
        b += (k % 2 == 0) ? term : Rational(-term);
    }
    return b;
}

Integer bernoulli_scaled_numerator(unsigned n)
{
    require_positive(n, "bernoulli_scaled_numerator");
    const auto sums = multinomial_sums(n);
    const Integer top = factorial(n + 1);
    Integer total = 0;
    for (unsigned k = 1; k <= n; ++k) {
        Integer weight = top / (k + 1); // exact: k + 1 <= n + 1
        const Integer term = weight * sums[k];
        if (k % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

bool shrub_order_poly_check(unsigned n)
{
    require_positive(n, "shrub_order_poly_check");
    const BernoulliTable table = bernoulli_numbers_oracle(n);
    return order_poly_recursive(strict_shrub(n)) == table.B[n].integral();
}

CompositionSums composition_sums(unsigned n)
{
    CompositionSums sums{0, 0};
    for_each_composition(n, [&](const std::vector<unsigned>& parts) {
        const unsigned k = static_cast<unsigned>(parts.size());
        Integer plain = 1;
        Integer shifted = 1;
        for (auto part : parts) {
            plain *= factorial(part);
            shifted *= factorial(part + 1);
        }
        const int sign = (k % 2 == 0) ? 1 : -1;
        sums.factorial_weighted += Rational(sign) / (Rational(plain) * (k + 1));
        sums.shifted_factorial_weighted += Rational(sign) / Rational(shifted);
    });
    return sums;
}

bool composition_sum_identity_check(unsigned n)
{
    require_positive(n, "composition_sum_identity_check");
    const CompositionSums sums = composition_sums(n);
    const BernoulliTable table = bernoulli_numbers_oracle(n);
    return sums.factorial_weighted == sums.shifted_factorial_weighted
           && Rational(factorial(n)) * sums.shifted_factorial_weighted == table.b[n];
}

std::vector<Integer> shrub_path_counts_formula(unsigned n)
{
    require_positive(n, "shrub_path_counts_formula");
    const auto sums = multinomial_sums(n);
    std::vector<Integer> c(n + 2);
    for (unsigned k = 2; k <= n + 1; ++k) {
        c[k] = sums[k - 1];
    }
    return c;
}

} // namespace orderpoly
