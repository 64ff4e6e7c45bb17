#pragma once

#include <cstddef>
#include <string>

#include "orderpoly/framework.hpp"
#include "orderpoly/poset.hpp"
#include "orderpoly/unipoly.hpp"

namespace orderpoly {

enum class RecursionFlavor {
    /// sum over nonempty ideals I of Psi(P \ I)
    AllIdeals,
    /// sum over nonempty subsets S of the minimal elements of Psi(P \ S)
    MinimalSubsets,
};

struct UnlabeledInvariantSpec {
    std::string name;
    CarrierValue base;
    LinearOperator op;
    RecursionFlavor flavor = RecursionFlavor::AllIdeals;
};

struct UnlabeledRunStats {
    /// Number of Psi(P \ S) summands evaluated while expanding distinct sub-posets.
    std::size_t summands = 0;
    /// Number of distinct sub-posets (up to isomorphism) expanded.
    std::size_t expanded = 0;
};

/// Psi(empty) = base, Psi(P) = Xi( sum over the flavor's index sets S of Psi(P \ S) ),
/// memoized on unlabeled_key.
CarrierValue run_unlabeled_invariant(const UnlabeledInvariantSpec& spec, const Poset& p,
                                     UnlabeledRunStats* stats = nullptr);

UnlabeledInvariantSpec weak_order_spec();
UnlabeledInvariantSpec strict_order_spec();
UnlabeledInvariantSpec signed_nabla_spec();

/// Omega(P; t): all-ideals recursion with Delta^{-1}.
UniPoly order_poly_unlabeled(const Poset& p);
/// Strict order polynomial: minimal-subsets recursion with Delta^{-1}.
UniPoly strict_order_poly(const Poset& p);
/// (-1)^{|P|} Omega(P; t) from -nabla^{-1} over minimal subsets.
UniPoly signed_order_poly_nabla(const Poset& p);

/// Omega(P; t) == (-1)^{|P|} strict(P; -t). Requires |P| >= 1.
bool reciprocity_check(const Poset& p);
/// strict(P; 1) and Omega(P; -1) take the antichain values (1 and (-1)^{|P|})
/// on antichains and vanish otherwise. Requires |P| >= 1.
bool strict_value_at_one_check(const Poset& p);

} // namespace orderpoly
