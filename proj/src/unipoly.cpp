#include "orderpoly/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orderpoly {

UniPoly::UniPoly(std::vector<Rational> coefficients, std::string variable)
    : coeffs_(std::move(coefficients)), var_(std::move(variable))
{
    trim();
}

UniPoly UniPoly::constant(const Rational& c, std::string variable)
{
    return UniPoly({c}, std::move(variable));
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t power, std::string variable)
{
    std::vector<Rational> cs(power + 1);
    cs[power] = c;
    return UniPoly(std::move(cs), std::move(variable));
}

UniPoly UniPoly::identity(std::string variable)
{
    return monomial(1, 1, std::move(variable));
}

UniPoly UniPoly::with_variable(std::string variable) const
{
    UniPoly r = *this;
    r.var_ = std::move(variable);
    return r;
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational UniPoly::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::leading_coefficient() const
{
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UniPoly::eval(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

UniPoly UniPoly::shifted(const Rational& c) const
{
    // Horner in the ring: acc <- acc * (t + c) + a_i
    std::vector<Rational> acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        std::vector<Rational> next(acc.size() + 1);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] += acc[i] * c;
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return UniPoly(std::move(acc), var_);
}

UniPoly UniPoly::reflected() const
{
    std::vector<Rational> cs = coeffs_;
    for (std::size_t i = 1; i < cs.size(); i += 2) {
        cs[i] = -cs[i];
    }
    return UniPoly(std::move(cs), var_);
}

UniPoly UniPoly::derivative() const
{
    if (coeffs_.size() <= 1) {
        return UniPoly({}, var_);
    }
    std::vector<Rational> cs(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        cs[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    }
    return UniPoly(std::move(cs), var_);
}

UniPoly UniPoly::integral() const
{
    std::vector<Rational> cs(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        cs[i + 1] = coeffs_[i] / static_cast<unsigned long>(i + 1);
    }
    return UniPoly(std::move(cs), var_);
}

UniPoly UniPoly::divided_by_root(const Rational& r) const
{
    if (eval(r) != 0) {
        throw std::domain_error("divided_by_root: value is not a root");
    }
    if (coeffs_.empty()) {
        return *this;
    }
    // synthetic division
    std::vector<Rational> q(coeffs_.size() - 1);
    Rational carry = 0;
    for (std::size_t i = coeffs_.size() - 1; i >= 1; --i) {
        carry = coeffs_[i] + carry * r;
        q[i - 1] = carry;
    }
    return UniPoly(std::move(q), var_);
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return UniPoly({}, a.var_);
    }
    std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly(std::move(cs), a.var_);
}

UniPoly& UniPoly::operator*=(const UniPoly& o)
{
    *this = *this * o;
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    trim();
    return *this;
}

UniPoly UniPoly::pow(unsigned k) const
{
    UniPoly result = constant(1, var_);
    UniPoly base = *this;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

std::string UniPoly::to_string() const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        const Rational mag = abs(c);
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << to_display_string(mag);
            continue;
        }
        if (mag != 1) {
            os << to_display_string(mag) << "·";
        }
        os << var_;
        if (k > 1) {
            os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p)
{
    return os << p.to_string();
}

UniPoly one_minus(std::string variable)
{
    return UniPoly({1, -1}, std::move(variable));
}

UniPoly delta(const UniPoly& p)
{
    return p.shifted(1) - p;
}

UniPoly binomial_polynomial(std::size_t k, std::string variable)
{
    UniPoly r = UniPoly::constant(1, variable);
    for (std::size_t j = 0; j < k; ++j) {
        // times (t - j) / (j + 1)
        r *= UniPoly({Rational(-static_cast<long>(j)), 1}, variable);
        r *= Rational(1, static_cast<unsigned long>(j + 1));
    }
    return r;
}

UniPoly delta_inverse(const UniPoly& p)
{
    if (p.is_zero()) {
        return p;
    }
    const std::size_t n = p.coefficients().size();
    // Newton forward differences at 0 give p = sum_k d_k binom(t, k).
    std::vector<Rational> diffs(n);
    for (std::size_t i = 0; i < n; ++i) {
        diffs[i] = p.eval(static_cast<long>(i));
    }
    std::vector<Rational> d(n);
    for (std::size_t k = 0; k < n; ++k) {
        d[k] = diffs[0];
        for (std::size_t i = 0; i + 1 < n - k; ++i) {
            diffs[i] = diffs[i + 1] - diffs[i];
        }
    }
    // delta binom(t, k+1) = binom(t, k), and binom(t, k+1) vanishes at 0.
    UniPoly g({}, p.variable());
    UniPoly basis = UniPoly::identity(p.variable()); // binom(t, 1)
    for (std::size_t k = 0; k < n; ++k) {
        g += basis * d[k];
        basis *= UniPoly({Rational(-static_cast<long>(k + 1)), 1}, p.variable());
        basis *= Rational(1, static_cast<unsigned long>(k + 2));
    }
    return g;
}

UniPoly nabla(const UniPoly& p)
{
    return p - p.shifted(-1);
}

UniPoly nabla_inverse(const UniPoly& p)
{
    // g(t) = sum_{j=1}^{t} p(j) = (delta^{-1} p(. + 1))(t)
    return delta_inverse(p.shifted(1));
}

UniPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points,
                             std::string variable)
{
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i].first == points[j].first) {
                throw std::invalid_argument("lagrange_interpolate: duplicate abscissa "
                                            + to_display_string(points[i].first));
            }
        }
    }
    // Newton divided differences, then expand the nested form.
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i) {
        dd[i] = points[i].second;
    }
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
        }
    }
    UniPoly result({}, variable);
    for (std::size_t i = n; i-- > 0;) {
        result *= UniPoly({-points[i].first, 1}, variable);
        result += UniPoly::constant(dd[i], variable);
    }
    return result;
}

} // namespace orderpoly
