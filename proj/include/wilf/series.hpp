#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <vector>

namespace wilf {

using Integer = boost::multiprecision::cpp_int;

/// Truncated power series with exact integer coefficients. A series of
/// order N knows x^0..x^N; everything beyond is undefined, so binary
/// operations return the smaller of the two orders.
class Series {
public:
    /// Pads with zeros or drops coefficients so that exactly order + 1 remain.
    Series(std::vector<Integer> coeffs, int order);

    static Series zero(int order);
    static Series one(int order);
    /// x^k truncated to `order`.
    static Series monomial(int k, int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Integer& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    Series truncate(int order) const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);

    bool operator==(const Series&) const = default;

    /// "c0, c1, ..., cN"
    std::string to_string() const;

private:
    std::vector<Integer> coeffs_;
};

/// Multiplicative inverse; the constant term must be +1 or -1.
/// Throws std::domain_error("non-invertible series") otherwise.
Series reciprocal(const Series& a);

/// Coefficients of numer/denom up to x^order via the linear recurrence
/// defined by denom. Throws std::domain_error on a zero constant term in
/// denom, or when the expansion is not integral.
Series expand_rational(std::span<const Integer> numer, std::span<const Integer> denom, int order);

/// x^2/(1-x) * prod_{i>=1} (1 - x^i)^{-ceil((i+1)/2)}: one part of size at
/// least two plus a multiset of parts of size i in ceil((i+1)/2) colours.
Series partition_key_series(int order);

/// (1 - 2x)/(1 - 4x + 2x^2).
Series x_class_series(int order);

}  // namespace wilf
