#ifndef TPQ_INTPOLY_HPP
#define TPQ_INTPOLY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "nat.hpp"

namespace tpq {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. Index = exponent. The zero polynomial has no coefficients
/// and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    static IntPoly constant(Int c);
    static IntPoly monomial(unsigned exponent, Int coeff = 1);
    // Accepts the rendering grammar, e.g. "x^4 - x^3 + x^2 + 1", "2x^3", "-x + 1", "0".
    static IntPoly parse(std::string_view text);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int coeff(std::size_t exponent) const {
        return exponent < coeffs_.size() ? coeffs_[exponent] : Int(0);
    }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    std::string text() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return coeffs_ != o.coeffs_; }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Int> coeffs_;
};

IntPoly multiply(const IntPoly& a, const IntPoly& b);

struct DivRem {
    IntPoly quotient;
    IntPoly remainder;
};

/// Exact long division by a monic divisor: p = q*quotient + remainder with
/// deg remainder < deg q. Throws if q is zero or not monic.
DivRem divrem(const IntPoly& p, const IntPoly& q);

Int eval_at(const IntPoly& p, const Int& x);

}  // namespace tpq

#endif
