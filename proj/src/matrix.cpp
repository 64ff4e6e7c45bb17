#include "orderpoly/matrix.hpp"

#include <stdexcept>

namespace orderpoly {

RatMatrix RatMatrix::identity(std::size_t dim)
{
    RatMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1;
    }
    return m;
}

bool RatMatrix::is_zero() const
{
    for (const auto& x : data_) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

bool RatMatrix::is_strictly_upper_triangular() const
{
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            if ((*this)(i, j) != 0) {
                return false;
            }
        }
    }
    return true;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o)
{
    if (o.dim_ != dim_) {
        throw std::invalid_argument("RatMatrix: dimension mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += o.data_[i];
    }
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o)
{
    if (o.dim_ != dim_) {
        throw std::invalid_argument("RatMatrix: dimension mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= o.data_[i];
    }
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& c)
{
    for (auto& x : data_) {
        x *= c;
    }
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    if (a.dim_ != b.dim_) {
        throw std::invalid_argument("RatMatrix: dimension mismatch");
    }
    const std::size_t n = a.dim_;
    RatMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& bkj = b(k, j);
                if (bkj != 0) {
                    c(i, j) += aik * bkj;
                }
            }
        }
    }
    return c;
}

RatMatrix RatMatrix::pow(unsigned k) const
{
    RatMatrix result = identity(dim_);
    for (unsigned i = 0; i < k; ++i) {
        result = result * *this;
    }
    return result;
}

RatMatrix PolyMatrix::eval(const Rational& t) const
{
    RatMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            m(i, j) = (*this)(i, j).eval(t);
        }
    }
    return m;
}

PolyMatrix PolyMatrix::derivative() const
{
    PolyMatrix d(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        d.data_[i] = data_[i].derivative();
    }
    return d;
}

RatMatrix matrix_log_unipotent(const RatMatrix& a)
{
    if (!a.is_strictly_upper_triangular()) {
        throw std::invalid_argument("matrix_log_unipotent: input is not strictly upper triangular");
    }
    RatMatrix result(a.dim());
    RatMatrix power = a;
    for (unsigned k = 1; k <= a.dim() && !power.is_zero(); ++k) {
        const Rational coeff(k % 2 == 1 ? 1 : -1, k);
        result += power * coeff;
        power = power * a;
    }
    return result;
}

PolyMatrix matrix_exp_scaled(const RatMatrix& phi)
{
    if (!phi.is_strictly_upper_triangular()) {
        throw std::invalid_argument("matrix_exp_scaled: input is not strictly upper triangular");
    }
    const std::size_t n = phi.dim();
    // coefficient lists per entry, filled power by power
    std::vector<std::vector<Rational>> coeffs(n * n);
    RatMatrix power = RatMatrix::identity(n);
    Integer k_factorial = 1;
    for (unsigned k = 0; k <= n && !power.is_zero(); ++k) {
        if (k > 0) {
            k_factorial *= k;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& v = power(i, j);
                if (v == 0) {
                    continue;
                }
                auto& c = coeffs[i * n + j];
                c.resize(k + 1);
                c[k] = v / Rational(k_factorial);
            }
        }
        power = power * phi;
    }
    PolyMatrix theta(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            theta(i, j) = UniPoly(std::move(coeffs[i * n + j]));
        }
    }
    return theta;
}

} // namespace orderpoly
