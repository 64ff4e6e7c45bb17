#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "orderpoly/unipoly.hpp"

namespace orderpoly {

/// An element numerator / (1 - lambda)^pole_order of Q[lambda] localized
/// at (1 - lambda).
///
/// Always stored in canonical form: either pole_order() == 0 or the
/// numerator is not divisible by (1 - lambda). The zero element has an empty
/// numerator and pole order 0. Canonical form makes structural equality
/// coincide with equality in the ring.
class LocalizedRatio {
public:
    LocalizedRatio() = default;
    LocalizedRatio(UniPoly numerator, unsigned pole_order);
    /// p / 1
    explicit LocalizedRatio(UniPoly polynomial) : LocalizedRatio(std::move(polynomial), 0) {}

    const UniPoly& numerator() const noexcept { return num_; }
    unsigned pole_order() const noexcept { return pole_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    /// Throws std::domain_error unless pole_order() == 0.
    UniPoly to_polynomial() const;

    /// Power-series coefficients of lambda^0 .. lambda^max_degree.
    std::vector<Rational> series(unsigned max_degree) const;

    LocalizedRatio& operator+=(const LocalizedRatio& o);
    LocalizedRatio& operator-=(const LocalizedRatio& o);
    LocalizedRatio& operator*=(const LocalizedRatio& o);
    LocalizedRatio& operator*=(const Rational& c);

    friend LocalizedRatio operator+(LocalizedRatio a, const LocalizedRatio& b) { return a += b; }
    friend LocalizedRatio operator-(LocalizedRatio a, const LocalizedRatio& b) { return a -= b; }
    friend LocalizedRatio operator*(LocalizedRatio a, const LocalizedRatio& b) { return a *= b; }
    friend LocalizedRatio operator*(LocalizedRatio a, const Rational& c) { return a *= c; }
    friend LocalizedRatio operator*(const Rational& c, LocalizedRatio a) { return a *= c; }

    friend bool operator==(const LocalizedRatio& a, const LocalizedRatio& b)
    {
        return a.pole_ == b.pole_ && a.num_ == b.num_;
    }
    friend bool operator!=(const LocalizedRatio& a, const LocalizedRatio& b) { return !(a == b); }

    std::string to_string() const;

private:
    void normalize();

    UniPoly num_;
    unsigned pole_ = 0;
};

std::ostream& operator<<(std::ostream& os, const LocalizedRatio& r);

/// Returns r unchanged; construction already normalizes. Kept as a named
/// entry point for callers that build ratios field by field.
LocalizedRatio localized_normalize(const LocalizedRatio& r);

/// lambda / (1 - lambda)
LocalizedRatio lambda_over_one_minus_lambda();

} // namespace orderpoly
