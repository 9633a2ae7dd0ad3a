#include "wilf/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace wilf {

Series::Series(std::vector<Integer> coeffs, int order) : coeffs_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::zero(int order) { return Series({}, order); }

Series Series::one(int order) { return Series({1}, order); }

Series Series::monomial(int k, int order) {
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    if (k <= order) c[static_cast<std::size_t>(k)] = 1;
    return Series(std::move(c), order);
}

Series Series::truncate(int order) const {
    return Series(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1),
                  std::min(order, this->order()));
}

Series Series::operator-() const {
    Series out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Series operator+(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
    return Series(std::move(c), n);
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
    }
    return Series(std::move(c), n);
}

std::string Series::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) out += ", ";
        out += coeffs_[k].str();
    }
    return out;
}

Series reciprocal(const Series& a) {
    const Integer& c0 = a[0];
    if (c0 != 1 && c0 != -1) throw std::domain_error("non-invertible series");
    const int n = a.order();
    std::vector<Integer> r(static_cast<std::size_t>(n) + 1);
    r[0] = c0;  // 1/c0 == c0 for units
    for (int k = 1; k <= n; ++k) {
        Integer acc = 0;
        for (int j = 1; j <= k; ++j) acc += a[j] * r[k - j];
        r[k] = -acc * c0;
    }
    return Series(std::move(r), n);
}

Series expand_rational(std::span<const Integer> numer, std::span<const Integer> denom, int order) {
    if (denom.empty() || denom[0] == 0) throw std::domain_error("denominator has zero constant term");
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        Integer acc = static_cast<std::size_t>(k) < numer.size() ? numer[k] : Integer(0);
        for (int j = 1; j <= k && static_cast<std::size_t>(j) < denom.size(); ++j) acc -= denom[j] * c[k - j];
        if (acc % denom[0] != 0) throw std::domain_error("rational expansion is not integral");
        c[k] = acc / denom[0];
    }
    return Series(std::move(c), order);
}

Series partition_key_series(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    // x^2/(1-x): the single part of size >= 2.
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    for (int k = 2; k <= order; ++k) c[k] = 1;
    // Multiplying by 1/(1-x^i) is a running sum with stride i.
    for (int i = 1; i <= order; ++i) {
        const int colours = (i + 2) / 2;
        for (int rep = 0; rep < colours; ++rep) {
            for (int k = i; k <= order; ++k) c[k] += c[k - i];
        }
    }
    return Series(std::move(c), order);
}

Series x_class_series(int order) {
    const std::vector<Integer> numer{1, -2};
    const std::vector<Integer> denom{1, -4, 2};
    return expand_rational(numer, denom, order);
}

}  // namespace wilf
