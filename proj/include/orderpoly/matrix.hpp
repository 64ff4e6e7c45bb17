#pragma once

#include <cstddef>
#include <vector>

#include "orderpoly/rational.hpp"
#include "orderpoly/unipoly.hpp"

namespace orderpoly {

/// Dense square matrix over Q, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static RatMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    bool is_zero() const;
    bool is_strictly_upper_triangular() const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const Rational& c);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rational& c) { return a *= c; }
    /// Skips zero entries, so products of sparse triangular matrices stay cheap.
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b)
    {
        return a.dim_ == b.dim_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    RatMatrix pow(unsigned k) const;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> data_;
};

/// Square matrix with UniPoly entries.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    std::size_t dim() const noexcept { return dim_; }
    UniPoly& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const UniPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    RatMatrix eval(const Rational& t) const;
    PolyMatrix derivative() const;

private:
    std::size_t dim_ = 0;
    std::vector<UniPoly> data_;
};

/// ln(I + A) = sum_{k>=1} (-1)^{k+1} A^k / k for strictly upper triangular A.
/// Throws std::invalid_argument for any other input.
RatMatrix matrix_log_unipotent(const RatMatrix& a);

/// exp(t * phi) = sum_k phi^k t^k / k! for strictly upper triangular phi.
/// Throws std::invalid_argument for any other input.
PolyMatrix matrix_exp_scaled(const RatMatrix& phi);

} // namespace orderpoly
