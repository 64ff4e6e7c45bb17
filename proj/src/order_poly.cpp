#include "orderpoly/order_poly.hpp"

#include <cstdlib>
#include <string>
#include <tuple>

namespace orderpoly {

std::size_t oracle_size_bound()
{
    if (const char* env = std::getenv("POSET_ORACLE_MAX")) {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
            // unparsable override: keep the default
        }
    }
    return 7;
}

Integer count_omega_maps(const LabeledPoset& lp, unsigned n)
{
    const std::size_t p = lp.size();
    if (p == 0) {
        return 1;
    }
    if (n == 0) {
        return 0;
    }
    // (lower, upper, strict): f(lower) <= f(upper), strictly if the labels descend
    std::vector<std::tuple<std::size_t, std::size_t, bool>> constraints;
    for (std::size_t x = 0; x < p; ++x) {
        for (auto y : lp.poset().above(x).members()) {
            constraints.emplace_back(x, y, lp.descents_above(x).contains(y));
        }
    }
    std::vector<unsigned> f(p, 1);
    Integer count = 0;
    while (true) {
        bool ok = true;
        for (const auto& [x, y, strict] : constraints) {
            if (strict ? !(f[x] < f[y]) : !(f[x] <= f[y])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            ++count;
        }
        std::size_t i = 0;
        while (i < p && f[i] == n) {
            f[i] = 1;
            ++i;
        }
        if (i == p) {
            break;
        }
        ++f[i];
    }
    return count;
}

UniPoly order_poly_bruteforce(const LabeledPoset& lp, std::optional<std::size_t> bound)
{
    const std::size_t limit = bound.value_or(oracle_size_bound());
    if (lp.size() > limit) {
        throw OracleBoundError("order_poly_bruteforce: poset of size " + std::to_string(lp.size())
                               + " exceeds the enumeration bound " + std::to_string(limit));
    }
    if (lp.size() == 0) {
        return UniPoly::constant(1);
    }
    // Omega has no constant term, so (0, 0) is a valid interpolation node.
    std::vector<std::pair<Rational, Rational>> points{{0, 0}};
    for (unsigned n = 1; n <= lp.size(); ++n) {
        points.emplace_back(Rational(n), Rational(count_omega_maps(lp, n)));
    }
    return lagrange_interpolate(points);
}

RatMatrix phi_matrix(const OmegaGraph& g)
{
    return matrix_log_unipotent(g.adjacency());
}

ThetaMatrix theta_matrix(const LabeledPoset& lp)
{
    const OmegaGraph g = build_omega_graph(lp);
    return ThetaMatrix{g.ideals(), matrix_exp_scaled(phi_matrix(g))};
}

UniPoly order_poly_matrix(const LabeledPoset& lp)
{
    const OmegaGraph g = build_omega_graph(lp);
    const RatMatrix phi = phi_matrix(g);
    const std::size_t dim = g.vertex_count();
    std::vector<Rational> row(dim);
    row[g.source()] = 1;
    std::vector<Rational> coeffs;
    Integer k_factorial = 1;
    for (unsigned k = 0; k <= lp.size(); ++k) {
        if (k > 0) {
            k_factorial *= k;
            std::vector<Rational> next(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                if (row[i] == 0) {
                    continue;
                }
                for (std::size_t j = i + 1; j < dim; ++j) {
                    if (phi(i, j) != 0) {
                        next[j] += row[i] * phi(i, j);
                    }
                }
            }
            row = std::move(next);
        }
        coeffs.push_back(row[g.sink()] / Rational(k_factorial));
    }
    return UniPoly(std::move(coeffs));
}

namespace {

UniPoly order_poly_recursive_impl(const LabeledPoset& lp, PolyMemo& memo)
{
    if (lp.size() == 0) {
        return UniPoly::constant(1);
    }
    const std::string key = labeled_key(lp);
    if (auto hit = memo.find(key)) {
        return *hit;
    }
    UniPoly sum;
    for (auto s : omega_natural_ideals(lp)) {
        if (s.empty()) {
            continue;
        }
        sum += order_poly_recursive_impl(induced_subposet(lp, lp.poset().elements() - s), memo);
    }
    UniPoly result = delta_inverse(sum);
    memo.insert(key, result);
    return result;
}

Rational phi_of(const LabeledPoset& lp, ScalarMemo& memo)
{
    const std::string key = labeled_key(lp);
    if (auto hit = memo.find(key)) {
        return *hit;
    }
    Rational value = phi(lp);
    memo.insert(key, value);
    return value;
}

// weights[r] = sum over strict chains of ideals empty = J_0 < ... < J_r = P of
// prod phi(J_i \ J_{i-1})
std::vector<Rational> flag_weights(const LabeledPoset& lp)
{
    const auto ideals = enumerate_ideals(lp.poset());
    const std::size_t p = lp.size();
    ScalarMemo memo;
    std::vector<std::vector<Rational>> w(ideals.size(), std::vector<Rational>(p + 1));
    w[0][0] = 1;
    for (std::size_t j = 1; j < ideals.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (!ideals[i].is_subset_of(ideals[j])) {
                continue;
            }
            const Rational f = phi_of(induced_subposet(lp, ideals[j] - ideals[i]), memo);
            if (f == 0) {
                continue;
            }
            for (std::size_t r = 0; r < p; ++r) {
                if (w[i][r] != 0) {
                    w[j][r + 1] += w[i][r] * f;
                }
            }
        }
    }
    return w.back();
}

void require_nonempty(const LabeledPoset& lp, const char* what)
{
    if (lp.size() == 0) {
        throw std::invalid_argument(std::string(what) + ": requires a nonempty poset");
    }
}

} // namespace

UniPoly order_poly_recursive(const LabeledPoset& lp, PolyMemo* memo)
{
    PolyMemo local;
    return order_poly_recursive_impl(lp, memo ? *memo : local);
}

Rational phi(const LabeledPoset& lp)
{
    if (lp.size() == 0) {
        return 0;
    }
    const PathCounts counts = count_paths(build_omega_graph(lp));
    Rational sum = 0;
    for (std::size_t k = 1; k < counts.c.size(); ++k) {
        Rational term(counts.c[k], Integer(static_cast<unsigned long>(k)));
        term.canonicalize();
        if (k % 2 == 1) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Rational phi_from_matrix(const LabeledPoset& lp)
{
    const OmegaGraph g = build_omega_graph(lp);
    if (g.vertex_count() == 1) {
        return 0;
    }
    return phi_matrix(g)(g.source(), g.sink());
}

bool convolution_check(const LabeledPoset& lp)
{
    PolyMemo memo;
    const std::size_t p = lp.size();
    // lhs[i][j] = coefficient of s^i t^j in Omega(s + t)
    std::vector<std::vector<Rational>> lhs(p + 1, std::vector<Rational>(p + 1));
    const UniPoly omega = order_poly_recursive(lp, &memo);
    for (std::size_t d = 0; d < omega.coefficients().size(); ++d) {
        for (std::size_t i = 0; i <= d; ++i) {
            lhs[i][d - i] += omega.coefficient(d) * Rational(binomial(d, i));
        }
    }
    std::vector<std::vector<Rational>> rhs(p + 1, std::vector<Rational>(p + 1));
    for (auto s : enumerate_ideals(lp.poset())) {
        const UniPoly lower = order_poly_recursive(induced_subposet(lp, s), &memo);
        const UniPoly upper = order_poly_recursive(induced_subposet(lp, lp.poset().elements() - s), &memo);
        for (std::size_t i = 0; i < lower.coefficients().size(); ++i) {
            for (std::size_t j = 0; j < upper.coefficients().size(); ++j) {
                rhs[i][j] += lower.coefficient(i) * upper.coefficient(j);
            }
        }
    }
    return lhs == rhs;
}

UniPoly omega_from_phi(const LabeledPoset& lp)
{
    require_nonempty(lp, "omega_from_phi");
    const auto w = flag_weights(lp);
    std::vector<Rational> coeffs(w.size());
    for (unsigned r = 1; r < w.size(); ++r) {
        coeffs[r] = w[r] / Rational(factorial(r));
    }
    return UniPoly(std::move(coeffs));
}

bool phi_recursion_check(const LabeledPoset& lp)
{
    require_nonempty(lp, "phi_recursion_check");
    const auto w = flag_weights(lp);
    Rational total = 0;
    for (unsigned r = 1; r < w.size(); ++r) {
        total += w[r] / Rational(factorial(r));
    }
    return total == (is_naturally_labeled(lp) ? 1 : 0);
}

bool derivative_identity_check(const LabeledPoset& lp)
{
    require_nonempty(lp, "derivative_identity_check");
    PolyMemo memo;
    const ElementSet all = lp.poset().elements();
    const UniPoly derivative = order_poly_recursive(lp, &memo).derivative();
    UniPoly left_form;
    UniPoly right_form;
    for (auto s : enumerate_ideals(lp.poset())) {
        if (!s.empty()) {
            left_form += order_poly_recursive(induced_subposet(lp, all - s), &memo)
                         * phi(induced_subposet(lp, s));
        }
        if (s != all) {
            right_form += order_poly_recursive(induced_subposet(lp, s), &memo)
                          * phi(induced_subposet(lp, all - s));
        }
    }
    return derivative == left_form && derivative == right_form;
}

} // namespace orderpoly
