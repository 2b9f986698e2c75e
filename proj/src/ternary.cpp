#include "ternary.hpp"

#include <algorithm>

namespace tpq {

namespace {

void check_binary_digits(const std::vector<std::uint8_t>& digits) {
    for (auto d : digits)
        if (d > 1) throw std::invalid_argument("digit string contains a digit other than 0/1");
}

}  // namespace

TernaryString TernaryString::from_digits_lsb(std::vector<std::uint8_t> digits) {
    check_binary_digits(digits);
    if (digits.empty() || digits.front() != 1 || digits.back() != 1)
        throw std::invalid_argument("digit string must start and end with digit 1");
    return TernaryString(std::move(digits));
}

TernaryString TernaryString::from_digits_lsb_trimmed(std::vector<std::uint8_t> digits) {
    while (!digits.empty() && digits.back() == 0) digits.pop_back();
    return from_digits_lsb(std::move(digits));
}

TernaryString TernaryString::parse_msb(std::string_view text) {
    std::vector<std::uint8_t> digits;
    digits.reserve(text.size());
    for (auto it = text.rbegin(); it != text.rend(); ++it) {
        if (*it != '0' && *it != '1')
            throw std::invalid_argument("ternary string must consist of digits 0 and 1");
        digits.push_back(static_cast<std::uint8_t>(*it - '0'));
    }
    return from_digits_lsb(std::move(digits));
}

TernaryString TernaryString::from_value(const Nat& n) {
    GeneralTernary g = GeneralTernary::of(n);
    if (!g.digits_all_binary())
        throw std::invalid_argument(to_decimal(n) + " is not a sum of distinct powers of 3");
    return from_digits_lsb(g.digits());
}

Nat TernaryString::value() const {
    Nat v = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) v = v * 3 + *it;
    return v;
}

std::string TernaryString::msb_string() const {
    std::string s(digits_.size(), '0');
    for (std::size_t i = 0; i < digits_.size(); ++i)
        s[digits_.size() - 1 - i] = static_cast<char>('0' + digits_[i]);
    return s;
}

bool TernaryString::operator<(const TernaryString& o) const {
    if (digits_.size() != o.digits_.size()) return digits_.size() < o.digits_.size();
    // Same length: compare from the most significant digit down.
    return std::lexicographical_compare(digits_.rbegin(), digits_.rend(),
                                        o.digits_.rbegin(), o.digits_.rend());
}

GeneralTernary GeneralTernary::from_digits_lsb(std::vector<std::uint8_t> digits) {
    for (auto d : digits)
        if (d > 2) throw std::invalid_argument("base-3 digit out of range");
    if (!digits.empty() && digits.back() == 0)
        throw std::invalid_argument("base-3 digit string has a high-order zero");
    return GeneralTernary(std::move(digits));
}

GeneralTernary GeneralTernary::of(const Nat& n) {
    if (n < 0) throw std::invalid_argument("negative value has no base-3 digit string");
    std::vector<std::uint8_t> digits;
    Nat v = n;
    while (v > 0) {
        digits.push_back(static_cast<std::uint8_t>(v % 3));
        v /= 3;
    }
    return GeneralTernary(std::move(digits));
}

Nat GeneralTernary::value() const {
    Nat v = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) v = v * 3 + *it;
    return v;
}

bool GeneralTernary::digits_all_binary() const {
    return std::all_of(digits_.begin(), digits_.end(), [](std::uint8_t d) { return d <= 1; });
}

std::string GeneralTernary::msb_string() const {
    if (digits_.empty()) return "0";
    std::string s(digits_.size(), '0');
    for (std::size_t i = 0; i < digits_.size(); ++i)
        s[digits_.size() - 1 - i] = static_cast<char>('0' + digits_[i]);
    return s;
}

Nat eval_ternary(const TernaryString& t) { return t.value(); }
Nat eval_ternary(const GeneralTernary& t) { return t.value(); }
GeneralTernary to_ternary(const Nat& n) { return GeneralTernary::of(n); }

bool is_sum_distinct_powers(const Nat& n) {
    Nat v = n;
    while (v > 0) {
        if (v % 3 == 2) return false;
        v /= 3;
    }
    return true;
}

Normalized normalize(const Nat& m) {
    if (m < 1) throw std::domain_error("normalize requires m >= 1");
    Normalized out{0, m};
    while (out.core % 3 == 0) {
        out.core /= 3;
        ++out.pow3;
    }
    return out;
}

std::optional<int> feasible_interval(const Nat& m) {
    if (m < 1) throw std::domain_error("feasible_interval requires m >= 1");
    // Smallest r with 2m < 3^(r+1), then check 2*3^r < 3m. Exact arithmetic.
    Nat twice = 2 * m;
    Nat power = 3;  // 3^(r+1)
    int r = 0;
    while (power <= twice) {
        power *= 3;
        ++r;
    }
    Nat pow_r = power / 3;  // 3^r
    if (2 * pow_r < 3 * m) return r;
    return std::nullopt;
}

}  // namespace tpq
