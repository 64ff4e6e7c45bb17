#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orderpoly/matrix.hpp"
#include "orderpoly/memo.hpp"
#include "orderpoly/omega_graph.hpp"
#include "orderpoly/poset.hpp"
#include "orderpoly/unipoly.hpp"

namespace orderpoly {

using PolyMemo = Memo<UniPoly>;
using ScalarMemo = Memo<Rational>;

/// Largest poset the enumeration oracle accepts. Defaults to 7; the
/// POSET_ORACLE_MAX environment variable overrides it.
std::size_t oracle_size_bound();

class OracleBoundError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Number of omega-order-preserving maps P -> [n], by enumerating all n^|P| maps.
Integer count_omega_maps(const LabeledPoset& lp, unsigned n);

/// Order polynomial by interpolating count_omega_maps at 0..|P|.
/// Throws OracleBoundError above the size bound (oracle_size_bound() when
/// no bound is given).
UniPoly order_poly_bruteforce(const LabeledPoset& lp, std::optional<std::size_t> bound = std::nullopt);

/// Theta(P, omega; t) = exp(t ln(I + A)) on the ideal lattice. Entry (I, J)
/// is the order polynomial of J \ I when I is a subset of J and 0 otherwise.
struct ThetaMatrix {
    std::vector<ElementSet> ideals;
    PolyMatrix entries;
};

/// Phi(P, omega) = ln(I + A(P, omega)).
RatMatrix phi_matrix(const OmegaGraph& g);
ThetaMatrix theta_matrix(const LabeledPoset& lp);

/// Entry (empty, P) of Theta, computed from row (empty) of the powers of Phi.
UniPoly order_poly_matrix(const LabeledPoset& lp);

/// Omega(P) = Delta^{-1} sum over nonempty omega-natural ideals S of Omega(P \ S),
/// memoized on canonical labeled sub-posets. Pass a memo to share it across calls.
UniPoly order_poly_recursive(const LabeledPoset& lp, PolyMemo* memo = nullptr);

/// phi(P, omega) = sum_k (-1)^{k-1} c_k / k; 0 for the empty poset.
Rational phi(const LabeledPoset& lp);
/// Entry (empty, P) of Phi.
Rational phi_from_matrix(const LabeledPoset& lp);

/// Omega(s + t) == sum over ideals S of Omega(S; s) Omega(P \ S; t), as an
/// identity of bivariate polynomials.
bool convolution_check(const LabeledPoset& lp);

/// sum_r (1/r!) sum over flags of ideals of the product of phi over the
/// successive differences equals 1 when P is omega-natural and 0 otherwise.
bool phi_recursion_check(const LabeledPoset& lp);

/// Omega rebuilt from phi values of flag differences.
UniPoly omega_from_phi(const LabeledPoset& lp);

/// Omega' == sum_{nonempty ideals S} phi(S) Omega(P \ S)
///         == sum_{ideals S != P} phi(P \ S) Omega(S).
bool derivative_identity_check(const LabeledPoset& lp);

} // namespace orderpoly
