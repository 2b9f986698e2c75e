#ifndef TPQ_FAMILIES_HPP
#define TPQ_FAMILIES_HPP

#include <string>
#include <vector>

#include "representation.hpp"

namespace tpq {

/// Membership of m in one of the four closed-form families whose members
/// have only universal representations, all sharing one quotient polynomial:
///   kPowerPlusOne : m = 3^r + 1
///   kRepunit      : m = (3^((r+1)k) - 1)/(3^k - 1) = 1 + 3^k + ... + 3^(rk)
///   kAlternating  : m = (3^((2r+1)k) + 1)/(3^k + 1)
///   kTwoPowerGap  : m = 3^r - 3^s + 1 with r > s > 0
struct FamilyTag {
    enum class Kind { kPowerPlusOne, kRepunit, kAlternating, kTwoPowerGap };
    Kind kind;
    int r = 0;
    int s = 0;
    int k = 0;

    std::string display() const;  // e.g. "3^r+1 (r=3)"
    std::string kind_name() const;
    bool operator==(const FamilyTag& o) const {
        return kind == o.kind && r == o.r && s == o.s && k == o.k;
    }
};

/// Every family equation m satisfies, found by bounded parameter search.
/// Overlapping tags are all reported. Deterministic order.
std::vector<FamilyTag> detect_families(const Nat& m);

/// The quotient polynomial shared by every representation of the family
/// member, e.g. x^r + 1 for kPowerPlusOne.
IntPoly canonical_quotient(const FamilyTag& tag);

Nat family_member(const FamilyTag& tag);

/// The k-th closed-form representation of 3^n - 2 (n >= 3, k >= 0):
/// p = 1 + x^n + ... + x^(n+k-1) + x^(n+k+1) + ... + x^(2n+k-1),
/// q = 1 + x + ... + x^(n+k-1); quotient x^n - x + 1.
Representation gen_3n2(int n, int k);

/// The j-th indecomposable representation of 100 (j >= 0), taking the
/// two-step loop j times; quotient x^4 + x^3 - x^2 + 1.
Representation gen_100(int j);

}  // namespace tpq

#endif
