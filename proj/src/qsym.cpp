#include "orderpoly/qsym.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "orderpoly/order_poly.hpp"

namespace orderpoly {

QSym QSym::one(std::size_t variable_count)
{
    QSym f(variable_count);
    f.terms_.emplace(Exponents(variable_count, 0), 1);
    return f;
}

QSym QSym::monomial(std::size_t variable_count, std::size_t var, unsigned power, const Rational& c)
{
    if (var == 0 || var > variable_count) {
        throw std::out_of_range("QSym::monomial: variable index out of range");
    }
    QSym f(variable_count);
    Exponents e(variable_count, 0);
    e[var - 1] = static_cast<std::uint8_t>(power);
    f.add_term(e, c);
    return f;
}

Rational QSym::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QSym::add_term(const Exponents& e, const Rational& c)
{
    if (e.size() != nvars_) {
        throw std::invalid_argument("QSym: exponent vector has the wrong length");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

unsigned QSym::total_degree() const
{
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0U));
    }
    return d;
}

void QSym::check_compatible(const QSym& o) const
{
    if (o.nvars_ != nvars_) {
        throw std::invalid_argument("QSym: variable counts differ");
    }
}

QSym& QSym::operator+=(const QSym& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

QSym& QSym::operator-=(const QSym& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

QSym& QSym::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

QSym operator*(const QSym& a, const QSym& b)
{
    a.check_compatible(b);
    QSym r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            QSym::Exponents e(a.nvars_);
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Rational QSym::specialize(std::size_t n) const
{
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        const bool vanishes = std::any_of(e.begin() + static_cast<long>(std::min(n, nvars_)), e.end(),
                                          [](std::uint8_t x) { return x != 0; });
        if (!vanishes) {
            total += c;
        }
    }
    return total;
}

namespace {

void compositions_of(unsigned remaining, std::vector<unsigned>& parts,
                     std::vector<std::vector<unsigned>>& out)
{
    if (remaining == 0) {
        out.push_back(parts);
        return;
    }
    for (unsigned first = 1; first <= remaining; ++first) {
        parts.push_back(first);
        compositions_of(remaining - first, parts, out);
        parts.pop_back();
    }
}

} // namespace

bool QSym::is_quasi_symmetric(unsigned max_degree) const
{
    for (unsigned d = 0; d <= max_degree; ++d) {
        std::vector<std::vector<unsigned>> comps;
        std::vector<unsigned> parts;
        compositions_of(d, parts, comps);
        for (const auto& comp : comps) {
            const std::size_t k = comp.size();
            if (k > nvars_) {
                continue;
            }
            // all increasing index tuples via a selection mask
            std::vector<bool> select(nvars_, false);
            std::fill(select.begin(), select.begin() + static_cast<long>(k), true);
            std::optional<Rational> reference;
            do {
                Exponents e(nvars_, 0);
                std::size_t part = 0;
                for (std::size_t i = 0; i < nvars_; ++i) {
                    if (select[i]) {
                        e[i] = static_cast<std::uint8_t>(comp[part++]);
                    }
                }
                const Rational c = coefficient(e);
                if (!reference) {
                    reference = c;
                } else if (*reference != c) {
                    return false;
                }
            } while (std::prev_permutation(select.begin(), select.end()));
        }
    }
    // nothing may live above max_degree
    return total_degree() <= max_degree;
}

std::string QSym::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    // highest degree first, then lexicographically larger exponent vectors
    std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const auto da = std::accumulate(a.first.begin(), a.first.end(), 0U);
        const auto db = std::accumulate(b.first.begin(), b.first.end(), 0U);
        if (da != db) {
            return da > db;
        }
        return a.first > b.first;
    });
    for (const auto& [e, c] : ordered) {
        const Rational mag = abs(c);
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool constant = std::all_of(e.begin(), e.end(), [](std::uint8_t x) { return x == 0; });
        if (constant) {
            os << to_display_string(mag);
            continue;
        }
        if (mag != 1) {
            os << to_display_string(mag) << "·";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!first_var) {
                os << "·";
            }
            first_var = false;
            os << "x" << (i + 1);
            if (e[i] > 1) {
                os << "^" << static_cast<unsigned>(e[i]);
            }
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QSym& f)
{
    return os << f.to_string();
}

QSym shift_operator(const QSym& f, unsigned steps)
{
    QSym r(f.variable_count());
    const std::size_t n = f.variable_count();
    for (const auto& [e, c] : f.terms()) {
        bool truncated = false;
        QSym::Exponents shifted(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (i + steps >= n) {
                truncated = true;
                break;
            }
            shifted[i + steps] = e[i];
        }
        if (!truncated) {
            r.add_term(shifted, c);
        }
    }
    return r;
}

QSym lambda_m(const QSym& f, unsigned m)
{
    if (m == 0) {
        throw std::invalid_argument("lambda_m: m must be at least 1");
    }
    const std::size_t n = f.variable_count();
    QSym r(n);
    for (std::size_t k = 1; k <= n; ++k) {
        r += QSym::monomial(n, k, m) * shift_operator(f, static_cast<unsigned>(k));
    }
    return r;
}

QSym qsym_direct(const LabeledPoset& lp, std::size_t variable_count)
{
    if (variable_count == 0) {
        throw std::invalid_argument("qsym_direct: at least one variable is required");
    }
    const std::size_t p = lp.size();
    QSym result(variable_count);
    if (p == 0) {
        return QSym::one(variable_count);
    }
    std::vector<std::tuple<std::size_t, std::size_t, bool>> constraints;
    for (std::size_t x = 0; x < p; ++x) {
        for (auto y : lp.poset().above(x).members()) {
            constraints.emplace_back(x, y, lp.descents_above(x).contains(y));
        }
    }
    std::vector<std::size_t> f(p, 0); // values 0-based
    while (true) {
        bool ok = true;
        for (const auto& [x, y, strict] : constraints) {
            if (strict ? !(f[x] < f[y]) : !(f[x] <= f[y])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            QSym::Exponents e(variable_count, 0);
            for (auto v : f) {
                ++e[v];
            }
            result.add_term(e, 1);
        }
        std::size_t i = 0;
        while (i < p && f[i] + 1 == variable_count) {
            f[i] = 0;
            ++i;
        }
        if (i == p) {
            break;
        }
        ++f[i];
    }
    return result;
}

bool qsym_specialization_check(const LabeledPoset& lp, std::size_t variable_count, std::size_t n)
{
    if (n > variable_count) {
        throw std::invalid_argument("qsym_specialization_check: n exceeds the variable count");
    }
    return qsym_direct(lp, variable_count).specialize(n) == order_poly_recursive(lp).eval(Rational(n));
}

} // namespace orderpoly
