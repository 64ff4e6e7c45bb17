#include "orderpoly/validation.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "orderpoly/bernoulli.hpp"
#include "orderpoly/catalog.hpp"
#include "orderpoly/eulerian.hpp"
#include "orderpoly/framework.hpp"
#include "orderpoly/omega_graph.hpp"
#include "orderpoly/order_poly.hpp"
#include "orderpoly/qsym.hpp"
#include "orderpoly/unlabeled.hpp"

namespace orderpoly {

namespace {

std::string describe(const LabeledPoset& lp)
{
    std::ostringstream os;
    os << "poset of size " << lp.size() << " with covers";
    for (auto [x, y] : lp.poset().covers()) {
        os << ' ' << x << '<' << y;
    }
    os << " and labels";
    for (auto l : lp.omega()) {
        os << ' ' << l;
    }
    return os.str();
}

std::string describe(const Poset& p)
{
    return describe(LabeledPoset(p, natural_labeling(p)));
}

/// Collects cases and the first failure; fills in timing when finished.
class Recorder {
public:
    Recorder(int id, std::string name) : start_(std::chrono::steady_clock::now())
    {
        result_.id = id;
        result_.name = std::move(name);
        result_.passed = true;
    }

    void expect(bool ok, const std::string& what)
    {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = what;
        }
    }

    template <class F>
    void expect_lazy(bool ok, F&& what)
    {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = what();
        }
    }

    CriterionResult finish()
    {
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return result_;
    }

    /// Runs body and records any exception as a failure.
    template <class F>
    CriterionResult run(F&& body)
    {
        try {
            body(*this);
        } catch (const std::exception& e) {
            expect(false, std::string("exception: ") + e.what());
        }
        return finish();
    }

private:
    CriterionResult result_;
    std::chrono::steady_clock::time_point start_;
};

Rational sign_of_size(std::size_t n)
{
    return n % 2 == 0 ? 1 : -1;
}

} // namespace

CriterionResult check_order_poly_routes(std::size_t max_size)
{
    return Recorder(1, "order polynomial routes").run([&](Recorder& r) {
        PolyMemo memo;
        for (const auto& lp : sampled_labeled_catalog(max_size)) {
            const UniPoly brute = order_poly_bruteforce(lp, std::max(max_size, oracle_size_bound()));
            const UniPoly matrix = order_poly_matrix(lp);
            const UniPoly recursive = order_poly_recursive(lp, &memo);
            r.expect_lazy(brute == matrix && matrix == recursive, [&] {
                return describe(lp) + ": brute " + brute.to_string() + ", matrix " + matrix.to_string()
                       + ", recursive " + recursive.to_string();
            });
        }
    });
}

CriterionResult check_eulerian_routes(std::size_t max_size)
{
    return Recorder(2, "Eulerian polynomial routes").run([&](Recorder& r) {
        PolyMemo memo;
        LocalizedMemo lmemo;
        for (const auto& lp : sampled_labeled_catalog(max_size)) {
            const EulerianPair chains = eulerian_from_chains(lp);
            const UniPoly recursive = eulerian_recursive(lp, &memo);
            r.expect_lazy(chains.e == recursive, [&] {
                return describe(lp) + ": chains " + chains.e.to_string() + ", recursive " + recursive.to_string();
            });
            r.expect_lazy(chains.e_tilde == e_tilde_recursive(lp, &lmemo),
                          [&] { return describe(lp) + ": e~ routes differ"; });
            r.expect_lazy(eulerian_series_check(lp, static_cast<unsigned>(2 * lp.size() + 2)),
                          [&] { return describe(lp) + ": generating series mismatch"; });
        }
    });
}

CriterionResult check_bernoulli(unsigned shrub_max, unsigned closed_form_max, unsigned integrality_max,
                                unsigned integral_max)
{
    return Recorder(3, "Bernoulli numbers from shrubs").run([&](Recorder& r) {
        const unsigned top = std::max({shrub_max, closed_form_max, integrality_max, integral_max});
        const BernoulliTable table = bernoulli_numbers_oracle(top);
        for (unsigned n = 1; n <= shrub_max; ++n) {
            const Rational got = bernoulli_from_shrub(n);
            r.expect_lazy(got == table.b[n], [&] {
                return "phi(S_" + std::to_string(n) + ") = " + to_display_string(got) + ", expected "
                       + to_display_string(table.b[n]);
            });
        }
        for (unsigned n = 1; n <= closed_form_max; ++n) {
            r.expect(bernoulli_multinomial(n) == table.b[n], "multinomial closed form differs at n = " + std::to_string(n));
        }
        for (unsigned n = 1; n <= integrality_max; ++n) {
            const Rational scaled = table.b[n] * Rational(factorial(n + 1));
            r.expect(scaled.get_den() == 1 && scaled.get_num() == bernoulli_scaled_numerator(n),
                     "(n+1)! b_n is not the integer sum at n = " + std::to_string(n));
        }
        for (unsigned n = 1; n <= integral_max; ++n) {
            r.expect(shrub_order_poly_check(n), "shrub order polynomial is not the integral of B_n at n = "
                                                    + std::to_string(n));
        }
    });
}

CriterionResult check_composition_sums(unsigned max_n)
{
    return Recorder(4, "composition sum identity").run([&](Recorder& r) {
        for (unsigned n = 1; n <= max_n; ++n) {
            r.expect(composition_sum_identity_check(n), "composition sums disagree at n = " + std::to_string(n));
        }
    });
}

CriterionResult check_antichain_eulerian(unsigned max_n)
{
    return Recorder(5, "antichain Eulerian polynomials").run([&](Recorder& r) {
        for (unsigned n = 1; n <= max_n; ++n) {
            const UniPoly binomial_route = antichain_eulerian_binomial(n);
            const UniPoly derivative_route = antichain_eulerian_derivative(n);
            const Poset a = make_antichain(n);
            const UniPoly chains = eulerian_from_chains(LabeledPoset(a, natural_labeling(a))).e;
            r.expect_lazy(binomial_route == derivative_route && derivative_route == chains, [&] {
                return "A_" + std::to_string(n) + ": binomial " + binomial_route.to_string() + ", derivative "
                       + derivative_route.to_string() + ", chains " + chains.to_string();
            });
            r.expect(binomial_route.eval(1) == Rational(factorial(n)), "A_n(1) != n! at n = " + std::to_string(n));
        }
    });
}

CriterionResult check_structural_identities(std::size_t max_size, std::size_t convolution_max_size)
{
    return Recorder(6, "structural identities").run([&](Recorder& r) {
        for (const auto& lp : exhaustive_labeled_catalog(convolution_max_size)) {
            r.expect_lazy(convolution_check(lp), [&] { return describe(lp) + ": convolution fails"; });
        }
        PolyMemo memo;
        for (const auto& lp : exhaustive_labeled_catalog(max_size)) {
            r.expect_lazy(phi_recursion_check(lp), [&] { return describe(lp) + ": phi flag sum fails"; });
            r.expect_lazy(omega_from_phi(lp) == order_poly_recursive(lp, &memo),
                          [&] { return describe(lp) + ": reconstruction from phi fails"; });
            r.expect_lazy(derivative_identity_check(lp), [&] { return describe(lp) + ": derivative formula fails"; });
        }
    });
}

CriterionResult check_chain_polynomials(std::size_t max_size)
{
    return Recorder(7, "chain polynomial identities").run([&](Recorder& r) {
        for (const auto& lp : exhaustive_labeled_catalog(max_size)) {
            r.expect_lazy(chain_polynomial_identity_check(lp),
                          [&] { return describe(lp) + ": chain polynomial identity fails"; });
        }
    });
}

CriterionResult check_framework(std::size_t max_size, std::size_t linearity_samples)
{
    return Recorder(8, "generic recursion instances").run([&](Recorder& r) {
        const InvariantSpec omega = omega_spec();
        const InvariantSpec etilde = e_tilde_spec();
        const InvariantSpec euler = eulerian_spec();
        CarrierMemo omega_memo;
        CarrierMemo etilde_memo;
        CarrierMemo euler_memo;
        for (const auto& lp : exhaustive_labeled_catalog(max_size)) {
            r.expect_lazy(std::get<UniPoly>(run_invariant(omega, lp, &omega_memo)) == order_poly_matrix(lp),
                          [&] { return describe(lp) + ": Delta^{-1} instance differs from Omega"; });
            r.expect_lazy(std::get<LocalizedRatio>(run_invariant(etilde, lp, &etilde_memo)) == e_tilde_recursive(lp),
                          [&] { return describe(lp) + ": localized instance differs from e~"; });
            r.expect_lazy(std::get<UniPoly>(run_invariant(euler, lp, &euler_memo)) == eulerian_recursive(lp),
                          [&] { return describe(lp) + ": family instance differs from e"; });
            const std::size_t n = lp.size() + 1;
            r.expect_lazy(qsym_recursive(lp, n) == qsym_direct(lp, n),
                          [&] { return describe(lp) + ": Lambda recursion differs from direct K"; });
        }
        std::mt19937_64 rng(7);
        r.expect(check_linearity(delta_inverse_operator(), rng, linearity_samples), "Delta^{-1} is not linear");
        r.expect(check_linearity(negative_nabla_inverse_operator(), rng, linearity_samples), "-nabla^{-1} is not linear");
        r.expect(check_linearity(m_lambda_operator(), rng, linearity_samples), "M_lambda is not linear");
        r.expect(check_linearity(eulerian_family_operator(), rng, linearity_samples, 4),
                 "lambda (1-lambda)^{m-1} is not linear");
        r.expect(check_linearity(lambda_family_operator(4), rng, linearity_samples, 3, 4), "Lambda_m is not linear");
    });
}

CriterionResult check_qsym(std::size_t max_size, std::size_t max_vars)
{
    return Recorder(9, "quasi-symmetric generating function").run([&](Recorder& r) {
        PolyMemo memo;
        for (const auto& lp : exhaustive_labeled_catalog(max_size)) {
            const UniPoly omega = order_poly_recursive(lp, &memo);
            for (std::size_t vars = 1; vars <= max_vars; ++vars) {
                const QSym k = qsym_direct(lp, vars);
                r.expect_lazy(k.is_quasi_symmetric(static_cast<unsigned>(lp.size())), [&] {
                    return describe(lp) + ": not quasi-symmetric in " + std::to_string(vars) + " variables";
                });
                for (std::size_t n = 0; n <= vars; ++n) {
                    r.expect_lazy(k.specialize(n) == omega.eval(Rational(n)), [&] {
                        return describe(lp) + ": specialization to " + std::to_string(n) + " ones fails";
                    });
                }
            }
        }
    });
}

CriterionResult check_unlabeled(std::size_t max_size, std::size_t reciprocity_max_size)
{
    return Recorder(10, "unlabeled recursions").run([&](Recorder& r) {
        PolyMemo memo;
        std::mt19937_64 rng(11);
        for (std::size_t n = 1; n <= max_size; ++n) {
            for (const Poset& p : posets_up_to_iso(n)) {
                const UniPoly weak = order_poly_unlabeled(p);
                const UniPoly strict = strict_order_poly(p);
                const auto first = linear_extension(p);
                const auto second = random_linear_extension(p, rng);
                for (const auto& order : {first, second}) {
                    const LabeledPoset natural(p, labeling_from_extension(n, order, false));
                    const LabeledPoset reversed(p, labeling_from_extension(n, order, true));
                    r.expect_lazy(weak == order_poly_recursive(natural, &memo),
                                  [&] { return describe(p) + ": all-ideals recursion differs from natural Omega"; });
                    r.expect_lazy(strict == order_poly_recursive(reversed, &memo), [&] {
                        return describe(p) + ": minimal-subsets recursion differs from reversed Omega";
                    });
                }
                r.expect_lazy(sign_of_size(n) * signed_order_poly_nabla(p) == weak,
                              [&] { return describe(p) + ": nabla route differs"; });
                UnlabeledRunStats all_stats;
                UnlabeledRunStats minimal_stats;
                run_unlabeled_invariant(weak_order_spec(), p, &all_stats);
                run_unlabeled_invariant(strict_order_spec(), p, &minimal_stats);
                r.expect_lazy(minimal_stats.summands <= all_stats.summands,
                              [&] { return describe(p) + ": minimal-subsets recursion did more work"; });
            }
        }
        for (std::size_t n = 1; n <= reciprocity_max_size; ++n) {
            for (const Poset& p : posets_up_to_iso(n)) {
                r.expect_lazy(reciprocity_check(p), [&] { return describe(p) + ": reciprocity fails"; });
                r.expect_lazy(strict_value_at_one_check(p),
                              [&] { return describe(p) + ": antichain value characterization fails"; });
            }
        }
    });
}

CriterionResult check_exp_log(std::size_t max_size, unsigned max_power)
{
    return Recorder(11, "exp/log round trip").run([&](Recorder& r) {
        for (const auto& lp : sampled_labeled_catalog(max_size)) {
            const ThetaMatrix theta = theta_matrix(lp);
            const OmegaGraph g = build_omega_graph(lp);
            const RatMatrix step = RatMatrix::identity(g.vertex_count()) + g.adjacency();
            RatMatrix power = RatMatrix::identity(g.vertex_count());
            for (unsigned n = 0; n <= max_power; ++n) {
                r.expect_lazy(theta.entries.eval(Rational(n)) == power, [&] {
                    return describe(lp) + ": Theta(" + std::to_string(n) + ") != (I + A)^" + std::to_string(n);
                });
                power = power * step;
            }
        }
    });
}

std::vector<CriterionResult> run_check_suite(std::size_t max_size)
{
    const auto cap = [max_size](std::size_t n) { return std::min(n, max_size); };
    const auto capu = [max_size](unsigned n) { return static_cast<unsigned>(std::min<std::size_t>(n, 3 * max_size)); };
    std::vector<CriterionResult> out;
    out.push_back(check_order_poly_routes(cap(5)));
    out.push_back(check_eulerian_routes(cap(5)));
    out.push_back(check_bernoulli(capu(12), capu(15), capu(20), capu(8)));
    out.push_back(check_composition_sums(capu(15)));
    out.push_back(check_antichain_eulerian(capu(10)));
    out.push_back(check_structural_identities(cap(4), cap(5)));
    out.push_back(check_chain_polynomials(cap(5)));
    out.push_back(check_framework(cap(4)));
    out.push_back(check_qsym(cap(4), cap(5)));
    out.push_back(check_unlabeled(cap(5), cap(6)));
    out.push_back(check_exp_log(cap(5)));
    return out;
}

} // namespace orderpoly
