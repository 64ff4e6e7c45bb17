#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "orderpoly/poset.hpp"
#include "orderpoly/rational.hpp"

namespace orderpoly {

/// Polynomial in x_1..x_N with rational coefficients: the restriction of a
/// formal power series in x_1, x_2, ... to monomials in the first N variables.
/// Exponent vectors always have length N; zero coefficients are never stored.
class QSym {
public:
    using Exponents = std::vector<std::uint8_t>;

    QSym() = default;
    explicit QSym(std::size_t variable_count) : nvars_(variable_count) {}

    static QSym one(std::size_t variable_count);
    /// c * x_{var}^{power}, var 1-based.
    static QSym monomial(std::size_t variable_count, std::size_t var, unsigned power, const Rational& c = 1);

    std::size_t variable_count() const noexcept { return nvars_; }
    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Exponents& e) const;
    /// Adds c to the coefficient of x^e.
    void add_term(const Exponents& e, const Rational& c);
    unsigned total_degree() const;

    QSym& operator+=(const QSym& o);
    QSym& operator-=(const QSym& o);
    QSym& operator*=(const Rational& c);
    friend QSym operator+(QSym a, const QSym& b) { return a += b; }
    friend QSym operator-(QSym a, const QSym& b) { return a -= b; }
    friend QSym operator*(QSym a, const Rational& c) { return a *= c; }
    friend QSym operator*(const Rational& c, QSym a) { return a *= c; }
    friend QSym operator*(const QSym& a, const QSym& b);
    friend bool operator==(const QSym& a, const QSym& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const QSym& a, const QSym& b) { return !(a == b); }

    /// x_1 = ... = x_n = 1 and x_{n+1} = ... = x_N = 0.
    Rational specialize(std::size_t n) const;

    /// Coefficients depend only on the composition of exponents: checked for
    /// every composition of every degree up to max_degree and every choice
    /// of increasing indices in 1..N.
    bool is_quasi_symmetric(unsigned max_degree) const;

    std::string to_string() const;

private:
    void check_compatible(const QSym& o) const;

    std::size_t nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const QSym& f);

/// S^k: x_m -> x_{m+k} for every m >= 1; monomials pushed past x_N vanish.
QSym shift_operator(const QSym& f, unsigned steps);

/// Lambda_m f = sum_{k=1}^{N} x_k^m S^k(f), m >= 1.
QSym lambda_m(const QSym& f, unsigned m);

/// K(P, omega; x) in N variables by enumerating every map P -> [N].
QSym qsym_direct(const LabeledPoset& lp, std::size_t variable_count);

/// Specializing qsym_direct to x_1..x_n = 1 gives Omega(P, omega; n).
bool qsym_specialization_check(const LabeledPoset& lp, std::size_t variable_count, std::size_t n);

} // namespace orderpoly
