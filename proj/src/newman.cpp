#include "newman.hpp"

#include <algorithm>

namespace tpq {

NewmanPoly NewmanPoly::from_exponents(std::vector<int> exponents) {
    if (exponents.empty() || exponents.front() != 0)
        throw std::invalid_argument("Newman polynomial requires constant term 1");
    for (std::size_t i = 1; i < exponents.size(); ++i)
        if (exponents[i] <= exponents[i - 1])
            throw std::invalid_argument("exponent list must be strictly increasing");
    return NewmanPoly(std::move(exponents));
}

NewmanPoly NewmanPoly::from_ternary(const TernaryString& t) {
    std::vector<int> exps;
    const auto& digits = t.digits();
    for (std::size_t i = 0; i < digits.size(); ++i)
        if (digits[i] == 1) exps.push_back(static_cast<int>(i));
    return NewmanPoly(std::move(exps));
}

TernaryString NewmanPoly::to_ternary() const {
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(degree()) + 1, 0);
    for (int e : exponents_) digits[static_cast<std::size_t>(e)] = 1;
    return TernaryString::from_digits_lsb(std::move(digits));
}

IntPoly NewmanPoly::to_intpoly() const {
    std::vector<Int> cs(static_cast<std::size_t>(degree()) + 1, Int(0));
    for (int e : exponents_) cs[static_cast<std::size_t>(e)] = 1;
    return IntPoly(std::move(cs));
}

Nat NewmanPoly::value_at3() const { return to_ternary().value(); }

NewmanPoly newman_from_ternary(const TernaryString& t) { return NewmanPoly::from_ternary(t); }
TernaryString ternary_from_newman(const NewmanPoly& p) { return p.to_ternary(); }

GapSet gap_set(const NewmanPoly& p) {
    GapSet out;
    const auto& e = p.exponents();
    for (std::size_t i = 1; i < e.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) out.insert(e[i] - e[j]);
    return out;
}

bool product_is_newman(const NewmanPoly& s, const NewmanPoly& t) {
    // Gap-set disjointness, with s's differences in a flat membership table.
    const auto& a = s.exponents();
    const auto& b = t.exponents();
    std::vector<char> seen(static_cast<std::size_t>(s.degree()) + 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) seen[static_cast<std::size_t>(a[i] - a[j])] = 1;
    for (std::size_t i = 1; i < b.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            int d = b[i] - b[j];
            if (d <= s.degree() && seen[static_cast<std::size_t>(d)]) return false;
        }
    return true;
}

std::optional<NewmanPoly> multiply_newman(const NewmanPoly& s, const NewmanPoly& t) {
    if (!product_is_newman(s, t)) return std::nullopt;
    // Disjoint gap sets mean all exponent sums are distinct.
    std::vector<int> sums;
    sums.reserve(s.term_count() * t.term_count());
    for (int a : s.exponents())
        for (int b : t.exponents()) sums.push_back(a + b);
    std::sort(sums.begin(), sums.end());
    return NewmanPoly::from_exponents(std::move(sums));
}

Classification classify_pair(const NewmanPoly& p, const NewmanPoly& q) {
    DivRem dr = divrem(p.to_intpoly(), q.to_intpoly());
    if (dr.remainder.is_zero()) return Classification::universal(std::move(dr.quotient));
    return Classification::local();
}

}  // namespace tpq
