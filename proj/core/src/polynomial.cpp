#include "vknot/polynomial.hpp"

#include "vknot/errors.hpp"

namespace vknot {

void HTPolynomial::add_term(int degree, std::int64_t coeff) {
    if (degree < 1)
        throw DomainError("polynomial terms must have degree >= 1");
    auto it = terms_.find(degree);
    if (it == terms_.end()) {
        if (coeff != 0) terms_[degree] = coeff;
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

std::int64_t HTPolynomial::coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? 0 : it->second;
}

HTPolynomial HTPolynomial::added(const HTPolynomial& other) const {
    HTPolynomial out = *this;
    for (const auto& [d, c] : other.terms_) out.add_term(d, c);
    return out;
}

HTPolynomial HTPolynomial::subtracted(const HTPolynomial& other) const {
    HTPolynomial out = *this;
    for (const auto& [d, c] : other.terms_) out.add_term(d, -c);
    return out;
}

HTPolynomial HTPolynomial::scaled(std::int64_t k) const {
    HTPolynomial out;
    if (k == 0) return out;
    for (const auto& [d, c] : terms_) out.add_term(d, c * k);
    return out;
}

HTPolynomial HTPolynomial::substituted(int r) const {
    if (r < 0) throw DomainError("substitution exponent must be >= 0");
    HTPolynomial out;
    if (r == 0) return out;
    for (const auto& [d, c] : terms_) out.add_term(d * r, c);
    return out;
}

std::string HTPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : terms_) {
        const std::int64_t mag = c < 0 ? -c : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        out += std::to_string(mag) + "t^" + std::to_string(d);
    }
    return out;
}

} // namespace vknot
