#include "orderpoly/localized.hpp"

#include <algorithm>
#include <stdexcept>

namespace orderpoly {

namespace {

const std::string kLambda = "lambda";

UniPoly one_minus_lambda_pow(unsigned k)
{
    return one_minus(kLambda).pow(k);
}

} // namespace

LocalizedRatio::LocalizedRatio(UniPoly numerator, unsigned pole_order)
    : num_(std::move(numerator)), pole_(pole_order)
{
    normalize();
}

void LocalizedRatio::normalize()
{
    num_ = num_.with_variable(kLambda);
    if (num_.is_zero()) {
        pole_ = 0;
        return;
    }
    // (1 - lambda) | p  <=>  p(1) == 0; p / (1 - lambda) = -(p / (lambda - 1)).
    while (pole_ > 0 && num_.eval(1) == 0) {
        num_ = -num_.divided_by_root(1);
        --pole_;
    }
}

UniPoly LocalizedRatio::to_polynomial() const
{
    if (pole_ != 0) {
        throw std::domain_error("localized ratio has a pole at lambda = 1: " + to_string());
    }
    return num_;
}

std::vector<Rational> LocalizedRatio::series(unsigned max_degree) const
{
    // 1/(1-lambda)^k = sum_n binom(n+k-1, k-1) lambda^n  (k >= 1)
    std::vector<Rational> kernel(max_degree + 1);
    for (unsigned n = 0; n <= max_degree; ++n) {
        kernel[n] = pole_ == 0 ? Rational(n == 0 ? 1 : 0) : Rational(binomial(n + pole_ - 1, pole_ - 1));
    }
    std::vector<Rational> out(max_degree + 1);
    const auto& cs = num_.coefficients();
    for (std::size_t i = 0; i < cs.size() && i <= max_degree; ++i) {
        for (std::size_t n = 0; i + n <= max_degree; ++n) {
            out[i + n] += cs[i] * kernel[n];
        }
    }
    return out;
}

LocalizedRatio& LocalizedRatio::operator+=(const LocalizedRatio& o)
{
    const unsigned k = std::max(pole_, o.pole_);
    UniPoly lhs = num_ * one_minus_lambda_pow(k - pole_);
    UniPoly rhs = o.num_ * one_minus_lambda_pow(k - o.pole_);
    num_ = lhs + rhs;
    pole_ = k;
    normalize();
    return *this;
}

LocalizedRatio& LocalizedRatio::operator-=(const LocalizedRatio& o)
{
    return *this += o * Rational(-1);
}

LocalizedRatio& LocalizedRatio::operator*=(const LocalizedRatio& o)
{
    num_ *= o.num_;
    pole_ += o.pole_;
    normalize();
    return *this;
}

LocalizedRatio& LocalizedRatio::operator*=(const Rational& c)
{
    num_ *= c;
    normalize();
    return *this;
}

std::string LocalizedRatio::to_string() const
{
    if (pole_ == 0) {
        return num_.to_string();
    }
    std::string s = "(" + num_.to_string() + ") / (1 - lambda)";
    if (pole_ > 1) {
        s += "^" + std::to_string(pole_);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const LocalizedRatio& r)
{
    return os << r.to_string();
}

LocalizedRatio localized_normalize(const LocalizedRatio& r)
{
    return LocalizedRatio(r.numerator(), r.pole_order());
}

LocalizedRatio lambda_over_one_minus_lambda()
{
    return LocalizedRatio(UniPoly::identity(kLambda), 1);
}

} // namespace orderpoly
