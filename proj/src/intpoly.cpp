#include "intpoly.hpp"

#include <cctype>

namespace tpq {

IntPoly IntPoly::constant(Int c) {
    if (c == 0) return IntPoly();
    return IntPoly(std::vector<Int>{std::move(c)});
}

IntPoly IntPoly::monomial(unsigned exponent, Int coeff) {
    if (coeff == 0) return IntPoly();
    std::vector<Int> cs(exponent + 1, Int(0));
    cs[exponent] = std::move(coeff);
    return IntPoly(std::move(cs));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
    return IntPoly(std::move(cs));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] -= b.coeffs_[i];
    return IntPoly(std::move(cs));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(cs));
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) { return a * b; }

DivRem divrem(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (!q.is_monic()) throw std::domain_error("divisor must be monic");
    if (p.is_zero()) return {IntPoly(), IntPoly()};

    std::vector<Int> rem(p.coeffs());
    int dq = q.degree();
    int dp = p.degree();
    if (dp < dq) return {IntPoly(), p};

    std::vector<Int> quot(static_cast<std::size_t>(dp - dq) + 1, Int(0));
    for (int k = dp - dq; k >= 0; --k) {
        Int c = rem[static_cast<std::size_t>(k + dq)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k)] = c;
        for (int i = 0; i <= dq; ++i)
            rem[static_cast<std::size_t>(k + i)] -= c * q.coeff(static_cast<std::size_t>(i));
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

Int eval_at(const IntPoly& p, const Int& x) {
    Int v = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) v = v * x + *it;
    return v;
}

std::string IntPoly::text() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = degree(); e >= 0; --e) {
        const Int& c = coeffs_[static_cast<std::size_t>(e)];
        if (c == 0) continue;
        bool negative = c < 0;
        Int mag = negative ? Int(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1 || e == 0) out += mag.str();
        if (e >= 1) {
            out += "x";
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

struct Scanner {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    Int number() {
        skip_ws();
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        if (digits.empty()) throw std::invalid_argument("expected a number in polynomial text");
        return Int(digits);
    }
};

}  // namespace

IntPoly IntPoly::parse(std::string_view text) {
    Scanner sc{text};
    IntPoly acc;
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.consume('-')) {
            sign = -1;
        } else if (sc.consume('+')) {
            if (first) throw std::invalid_argument("polynomial text cannot start with '+'");
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between polynomial terms");
        }
        first = false;

        Int coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            coeff = sc.number();
            saw_coeff = true;
        }
        unsigned exponent = 0;
        if (sc.consume('x')) {
            exponent = 1;
            if (sc.consume('^')) {
                Int e = sc.number();
                if (e < 0 || e > 100000) throw std::invalid_argument("exponent out of range");
                exponent = static_cast<unsigned>(e);
            }
        } else if (!saw_coeff) {
            throw std::invalid_argument("expected a polynomial term");
        }
        acc = acc + IntPoly::monomial(exponent, sign * coeff);
    }
    return acc;
}

}  // namespace tpq
