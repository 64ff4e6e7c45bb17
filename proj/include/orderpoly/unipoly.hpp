#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "orderpoly/rational.hpp"

namespace orderpoly {

/// Dense univariate polynomial over Q.
///
/// coefficients()[i] is the coefficient of variable^i. The coefficient list
/// never ends in a zero, so the zero polynomial has an empty list and
/// degree() == -1. The variable name is a display tag only: it takes no part
/// in equality or arithmetic.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients, std::string variable = "t");

    static UniPoly constant(const Rational& c, std::string variable = "t");
    static UniPoly monomial(const Rational& c, std::size_t power, std::string variable = "t");
    /// The polynomial `variable`.
    static UniPoly identity(std::string variable = "t");

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    const std::string& variable() const noexcept { return var_; }
    UniPoly with_variable(std::string variable) const;

    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Rational coefficient(std::size_t i) const;
    Rational leading_coefficient() const;

    Rational eval(const Rational& x) const;

    /// p(t + c)
    UniPoly shifted(const Rational& c) const;
    /// p(-t)
    UniPoly reflected() const;
    UniPoly derivative() const;
    /// The antiderivative with zero constant term, i.e. the integral from 0 to t.
    UniPoly integral() const;
    /// Quotient by (t - r); requires p(r) == 0.
    UniPoly divided_by_root(const Rational& r) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly pow(unsigned k) const;

    /// Descending powers with exact fractions, e.g. "1/2·t^2 + 1/2·t".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
    std::string var_ = "t";
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

/// (1 - var)
UniPoly one_minus(std::string variable = "lambda");

// Finite-difference calculus. Each inverse is pinned by g(0) = 0.

/// f(t+1) - f(t)
UniPoly delta(const UniPoly& p);
/// The unique g with delta(g) == p and g(0) == 0, via the binomial basis.
UniPoly delta_inverse(const UniPoly& p);
/// f(t) - f(t-1)
UniPoly nabla(const UniPoly& p);
/// The unique g with nabla(g) == p and g(0) == 0.
UniPoly nabla_inverse(const UniPoly& p);

/// Unique polynomial of degree < points.size() through the given points.
/// Throws std::invalid_argument on a repeated abscissa.
UniPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points,
                             std::string variable = "t");

/// binom(t, k) as a polynomial in t.
UniPoly binomial_polynomial(std::size_t k, std::string variable = "t");

} // namespace orderpoly
