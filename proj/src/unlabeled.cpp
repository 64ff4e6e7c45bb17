#include "orderpoly/unlabeled.hpp"

#include <cstdint>
#include <stdexcept>

namespace orderpoly {

namespace {

std::vector<ElementSet> index_sets(const Poset& p, RecursionFlavor flavor)
{
    std::vector<ElementSet> out;
    if (flavor == RecursionFlavor::AllIdeals) {
        for (ElementSet s : enumerate_ideals(p)) {
            if (!s.empty()) {
                out.push_back(s);
            }
        }
        return out;
    }
    const std::uint64_t minimal = minimum_elements(p).bits();
    // every nonempty submask of the minimal elements
    for (std::uint64_t s = minimal; s != 0; s = (s - 1) & minimal) {
        out.emplace_back(s);
    }
    return out;
}

CarrierValue zero_of(const CarrierValue& v)
{
    return scale(v, 0);
}

CarrierValue run(const UnlabeledInvariantSpec& spec, const Poset& p, CarrierMemo& memo, UnlabeledRunStats& stats)
{
    if (p.size() == 0) {
        return spec.base;
    }
    const std::string key = unlabeled_key(p);
    if (auto hit = memo.find(key)) {
        return *hit;
    }
    ++stats.expanded;
    CarrierValue total = zero_of(spec.base);
    for (ElementSet s : index_sets(p, spec.flavor)) {
        ++stats.summands;
        total = add(total, run(spec, induced_poset(p, p.elements() - s), memo, stats));
    }
    total = spec.op.apply(total, 0);
    memo.insert(key, total);
    return total;
}

void require_nonempty(const Poset& p, const char* what)
{
    if (p.size() == 0) {
        throw std::invalid_argument(std::string(what) + ": the poset must be nonempty");
    }
}

} // namespace

CarrierValue run_unlabeled_invariant(const UnlabeledInvariantSpec& spec, const Poset& p, UnlabeledRunStats* stats)
{
    if (carrier_of(spec.base) != spec.op.carrier) {
        throw CarrierMismatch("invariant spec '" + spec.name + "': base and operator carriers differ");
    }
    CarrierMemo memo;
    UnlabeledRunStats local;
    return run(spec, p, memo, stats ? *stats : local);
}

UnlabeledInvariantSpec weak_order_spec()
{
    return {"weak", UniPoly::constant(1), delta_inverse_operator(), RecursionFlavor::AllIdeals};
}

UnlabeledInvariantSpec strict_order_spec()
{
    return {"strict", UniPoly::constant(1), delta_inverse_operator(), RecursionFlavor::MinimalSubsets};
}

UnlabeledInvariantSpec signed_nabla_spec()
{
    return {"nabla", UniPoly::constant(1), negative_nabla_inverse_operator(), RecursionFlavor::MinimalSubsets};
}

UniPoly order_poly_unlabeled(const Poset& p)
{
    return std::get<UniPoly>(run_unlabeled_invariant(weak_order_spec(), p));
}

UniPoly strict_order_poly(const Poset& p)
{
    return std::get<UniPoly>(run_unlabeled_invariant(strict_order_spec(), p));
}

UniPoly signed_order_poly_nabla(const Poset& p)
{
    return std::get<UniPoly>(run_unlabeled_invariant(signed_nabla_spec(), p));
}

bool reciprocity_check(const Poset& p)
{
    require_nonempty(p, "reciprocity_check");
    const Rational sign = p.size() % 2 == 0 ? 1 : -1;
    return order_poly_unlabeled(p) == sign * strict_order_poly(p).reflected();
}

bool strict_value_at_one_check(const Poset& p)
{
    require_nonempty(p, "strict_value_at_one_check");
    const bool antichain = p.is_antichain();
    const Rational sign = p.size() % 2 == 0 ? 1 : -1;
    const Rational expected_strict = antichain ? 1 : 0;
    const Rational expected_weak = antichain ? sign : Rational(0);
    return strict_order_poly(p).eval(1) == expected_strict && order_poly_unlabeled(p).eval(-1) == expected_weak;
}

} // namespace orderpoly
