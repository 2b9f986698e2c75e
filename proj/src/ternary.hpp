#ifndef TPQ_TERNARY_HPP
#define TPQ_TERNARY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nat.hpp"

namespace tpq {

/// Digit string over {0,1}, least-significant digit first. Canonical form:
/// nonempty, digit 0 is 1 and the top digit is 1, so the value has constant
/// term 1 and no leading zeros. These encode sums of distinct powers of 3.
class TernaryString {
public:
    // Validates canonical form as-is (no trimming).
    static TernaryString from_digits_lsb(std::vector<std::uint8_t> digits);
    // Trims trailing (high-order) zeros first, then validates.
    static TernaryString from_digits_lsb_trimmed(std::vector<std::uint8_t> digits);
    // Most-significant-first digit string, e.g. "1101".
    static TernaryString parse_msb(std::string_view text);
    static TernaryString from_value(const Nat& n);  // n must have only 0/1 ternary digits
    static TernaryString one() { return from_digits_lsb({1}); }

    const std::vector<std::uint8_t>& digits() const { return digits_; }
    std::size_t length() const { return digits_.size(); }
    int degree() const { return static_cast<int>(digits_.size()) - 1; }
    Nat value() const;
    std::string msb_string() const;

    bool operator==(const TernaryString& o) const { return digits_ == o.digits_; }
    bool operator!=(const TernaryString& o) const { return digits_ != o.digits_; }
    bool operator<(const TernaryString& o) const;

private:
    explicit TernaryString(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {}
    std::vector<std::uint8_t> digits_;
};

/// Digit string over {0,1,2}, least-significant first, with no high-order
/// zeros. The empty string is the value 0. This is the standard base 3 form.
class GeneralTernary {
public:
    GeneralTernary() = default;
    static GeneralTernary from_digits_lsb(std::vector<std::uint8_t> digits);
    static GeneralTernary of(const Nat& n);

    const std::vector<std::uint8_t>& digits() const { return digits_; }
    bool is_zero() const { return digits_.empty(); }
    Nat value() const;
    bool digits_all_binary() const;
    std::string msb_string() const;  // "0" for the value 0

    bool operator==(const GeneralTernary& o) const { return digits_ == o.digits_; }

private:
    explicit GeneralTernary(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {}
    std::vector<std::uint8_t> digits_;
};

Nat eval_ternary(const TernaryString& t);
Nat eval_ternary(const GeneralTernary& t);
GeneralTernary to_ternary(const Nat& n);

/// True iff every base-3 digit of n is 0 or 1 (n is a sum of distinct
/// powers of 3; n = 0 counts as the empty sum).
bool is_sum_distinct_powers(const Nat& n);

struct Normalized {
    unsigned pow3;  // exponent k
    Nat core;       // m1 with m = 3^k * m1 and m1 % 3 != 0
};
Normalized normalize(const Nat& m);  // m >= 1

/// The unique r >= 0 with 2*3^r < 3m and 2m < 3^(r+1), if any. A quotient of
/// sums of distinct powers of 3 always lies strictly inside such an interval.
std::optional<int> feasible_interval(const Nat& m);

}  // namespace tpq

#endif
