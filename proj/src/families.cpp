#include "families.hpp"

namespace tpq {

namespace {

// Exponent e with 3^e == n, or -1.
int log3_exact(const Nat& n) {
    if (n < 1) return -1;
    Nat v = n;
    int e = 0;
    while (v % 3 == 0) {
        v /= 3;
        ++e;
    }
    return v == 1 ? e : -1;
}

TernaryString ternary_from_exponent_runs(const std::vector<std::pair<int, int>>& runs) {
    // runs are inclusive [lo, hi] exponent ranges; empty when lo > hi.
    int top = 0;
    for (const auto& [lo, hi] : runs)
        if (lo <= hi) top = std::max(top, hi);
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(top) + 1, 0);
    for (const auto& [lo, hi] : runs)
        for (int e = lo; e <= hi; ++e) digits[static_cast<std::size_t>(e)] = 1;
    return TernaryString::from_digits_lsb(std::move(digits));
}

}  // namespace

std::string FamilyTag::kind_name() const {
    switch (kind) {
        case Kind::kPowerPlusOne: return "power_plus_one";
        case Kind::kRepunit: return "repunit";
        case Kind::kAlternating: return "alternating";
        default: return "two_power_gap";
    }
}

std::string FamilyTag::display() const {
    switch (kind) {
        case Kind::kPowerPlusOne:
            return "3^r+1 (r=" + std::to_string(r) + ")";
        case Kind::kRepunit:
            return "(3^{(r+1)k}-1)/(3^k-1) (k=" + std::to_string(k) + ",r=" + std::to_string(r) +
                   ")";
        case Kind::kAlternating:
            return "(3^{(2r+1)k}+1)/(3^k+1) (k=" + std::to_string(k) + ",r=" + std::to_string(r) +
                   ")";
        default:
            return "3^r-3^s+1 (r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";
    }
}

Nat family_member(const FamilyTag& tag) {
    switch (tag.kind) {
        case FamilyTag::Kind::kPowerPlusOne:
            return pow3(static_cast<unsigned>(tag.r)) + 1;
        case FamilyTag::Kind::kRepunit: {
            Nat sum = 0;
            for (int j = 0; j <= tag.r; ++j) sum += pow3(static_cast<unsigned>(j * tag.k));
            return sum;
        }
        case FamilyTag::Kind::kAlternating:
            return (pow3(static_cast<unsigned>((2 * tag.r + 1) * tag.k)) + 1) /
                   (pow3(static_cast<unsigned>(tag.k)) + 1);
        default:
            return pow3(static_cast<unsigned>(tag.r)) - pow3(static_cast<unsigned>(tag.s)) + 1;
    }
}

std::vector<FamilyTag> detect_families(const Nat& m) {
    if (m < 1) throw std::domain_error("detect_families requires m >= 1");
    std::vector<FamilyTag> tags;

    // m = 3^r + 1, r >= 1.
    if (m > 1) {
        int r = log3_exact(m - 1);
        if (r >= 1) tags.push_back({FamilyTag::Kind::kPowerPlusOne, r, 0, 0});
    }

    // m = 1 + 3^k + ... + 3^(rk), k >= 1, r >= 1.
    for (int k = 1; pow3(static_cast<unsigned>(k)) < m; ++k) {
        Nat step = pow3(static_cast<unsigned>(k));
        Nat sum = 1 + step;
        Nat term = step;
        for (int r = 1; sum <= m; ++r) {
            if (sum == m) tags.push_back({FamilyTag::Kind::kRepunit, r, 0, k});
            term *= step;
            sum += term;
        }
    }

    // m = (3^((2r+1)k) + 1)/(3^k + 1), k >= 1, r >= 1: m*(3^k+1) - 1 must be
    // 3^e with e = (2r+1)k.
    for (int k = 1; pow3(static_cast<unsigned>(2 * k)) <= m * 3; ++k) {
        Nat target = m * (pow3(static_cast<unsigned>(k)) + 1) - 1;
        int e = log3_exact(target);
        if (e >= 3 * k && e % k == 0 && (e / k) % 2 == 1) {
            int r = (e / k - 1) / 2;
            tags.push_back({FamilyTag::Kind::kAlternating, r, 0, k});
        }
    }

    // m = 3^r - 3^s + 1, r > s > 0: the 3-adic valuation of m-1 pins s.
    if (m > 1) {
        Nat u = m - 1;
        int s = 0;
        while (u % 3 == 0) {
            u /= 3;
            ++s;
        }
        if (s >= 1) {
            int d = log3_exact(u + 1);
            if (d >= 1) tags.push_back({FamilyTag::Kind::kTwoPowerGap, s + d, s, 0});
        }
    }
    return tags;
}

IntPoly canonical_quotient(const FamilyTag& tag) {
    switch (tag.kind) {
        case FamilyTag::Kind::kPowerPlusOne:
            return IntPoly::monomial(static_cast<unsigned>(tag.r)) + IntPoly::constant(1);
        case FamilyTag::Kind::kRepunit: {
            IntPoly sum;
            for (int j = 0; j <= tag.r; ++j)
                sum = sum + IntPoly::monomial(static_cast<unsigned>(j * tag.k));
            return sum;
        }
        case FamilyTag::Kind::kAlternating: {
            IntPoly sum;
            for (int j = 0; j <= 2 * tag.r; ++j)
                sum = sum + IntPoly::monomial(static_cast<unsigned>(j * tag.k),
                                              j % 2 == 0 ? 1 : -1);
            return sum;
        }
        default:
            return IntPoly::monomial(static_cast<unsigned>(tag.r)) -
                   IntPoly::monomial(static_cast<unsigned>(tag.s)) + IntPoly::constant(1);
    }
}

Representation gen_3n2(int n, int k) {
    if (n < 3) throw std::domain_error("gen_3n2 requires n >= 3");
    if (k < 0) throw std::domain_error("gen_3n2 requires k >= 0");
    TernaryString p = ternary_from_exponent_runs(
        {{0, 0}, {n, n + k - 1}, {n + k + 1, n + k + n - 1}});
    TernaryString q = ternary_from_exponent_runs({{0, n + k - 1}});
    return Representation(pow3(static_cast<unsigned>(n)) - 2, std::move(p), std::move(q));
}

Representation gen_100(int j) {
    if (j < 0) throw std::domain_error("gen_100 requires j >= 0");
    TernaryString p = ternary_from_exponent_runs(
        {{0, 0}, {3, 3}, {4, 4 + 2 * j - 1}, {4 + 2 * j + 1, 4 + 2 * j + 2}});
    std::vector<std::pair<int, int>> q_runs = {{0, 0}, {2, 2}};
    for (int i = 1; i <= j; ++i) q_runs.push_back({2 + 2 * i, 2 + 2 * i});
    TernaryString q = ternary_from_exponent_runs(q_runs);
    return Representation(Nat(100), std::move(p), std::move(q));
}

}  // namespace tpq
