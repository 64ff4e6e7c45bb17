#pragma once

#include "orderpoly/localized.hpp"
#include "orderpoly/memo.hpp"
#include "orderpoly/order_poly.hpp"
#include "orderpoly/poset.hpp"
#include "orderpoly/unipoly.hpp"

namespace orderpoly {

using LocalizedMemo = Memo<LocalizedRatio>;

/// e(P, omega; lambda) and e~ = e / (1 - lambda)^{|P|+1}.
struct EulerianPair {
    UniPoly e;
    LocalizedRatio e_tilde;
};

/// e = sum_k c_k lambda^k (1 - lambda)^{|P|-k} from omega-graph path counts;
/// e~ = (1/(1-lambda)) sum_k c_k (lambda/(1-lambda))^k assembled separately.
/// The empty poset gives e = 1, e~ = 1/(1 - lambda).
EulerianPair eulerian_from_chains(const LabeledPoset& lp);

/// e(P) = lambda sum_{nonempty omega-natural ideals S} (1-lambda)^{|S|-1} e(P \ S).
UniPoly eulerian_recursive(const LabeledPoset& lp, PolyMemo* memo = nullptr);

/// e~(P) = lambda/(1-lambda) sum_{nonempty omega-natural ideals S} e~(P \ S),
/// with e~(empty) = 1/(1 - lambda).
LocalizedRatio e_tilde_recursive(const LabeledPoset& lp, LocalizedMemo* memo = nullptr);

/// Compares sum_{n<=M} Omega(n) lambda^n with the expansion of
/// e / (1-lambda)^{|P|+1} through lambda^M. Requires M >= |P| + 2
/// (throws std::invalid_argument otherwise).
bool eulerian_series_check(const LabeledPoset& lp, unsigned max_degree);

/// e~ and e rebuilt from the anchored chain polynomial of the open omega-graph,
/// compared with the recursive routes:
///   e~ = lambda/(1-lambda)^2 c(G; lambda/(1-lambda)),
///   e  = lambda (1-lambda)^{|P|-1} c(G; lambda/(1-lambda)).
bool chain_polynomial_identity_check(const LabeledPoset& lp);

/// Same identities with the plain chain polynomial of the open graph
/// (c_0 = 1, every chain counted). Holds exactly for naturally labeled posets.
bool chain_polynomial_identity_check_unanchored(const LabeledPoset& lp);

/// A_n(lambda) = lambda sum_{k=1}^n binom(n,k) A_{n-k}(lambda) (1-lambda)^{k-1}, A_0 = 1.
UniPoly antichain_eulerian_binomial(unsigned n);
/// A_n(lambda) = lambda (1-lambda) A'_{n-1}(lambda) + n lambda A_{n-1}(lambda), A_0 = 1.
UniPoly antichain_eulerian_derivative(unsigned n);

} // namespace orderpoly
