#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace vknot {

// Integer Laurent-style polynomial in t with terms of degree >= 1 only,
// as produced by the affine-index weight of a diagram.  Zero coefficients
// are never stored.
class HTPolynomial {
public:
    HTPolynomial() = default;

    void add_term(int degree, std::int64_t coeff);
    std::int64_t coeff(int degree) const;

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, std::int64_t>& terms() const { return terms_; }

    HTPolynomial added(const HTPolynomial& other) const;
    HTPolynomial subtracted(const HTPolynomial& other) const;
    HTPolynomial scaled(std::int64_t k) const;

    // Substitutes t^d -> the single degree-(d*r) monomial, i.e. t -> t^r.
    // r = 0 sends every term to t^0 = 1, which the degree->=1 convention
    // discards, so the result is the zero polynomial.
    HTPolynomial substituted(int r) const;

    // "0", "2t^1", "2t^1 - 1t^3", ... in ascending degree with explicit
    // coefficient magnitudes and exponents.
    std::string to_string() const;

    friend bool operator==(const HTPolynomial&, const HTPolynomial&) = default;

private:
    std::map<int, std::int64_t> terms_;
};

} // namespace vknot
