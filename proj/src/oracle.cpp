#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace tpq {

namespace {

// Canonical order: index 0 is the polynomial 1; for r >= 1 the degree-r
// block occupies indices [2^(r-1), 2^r), ordered by the interior exponent
// mask (bit e-1 set <=> x^e present, 1 <= e <= r-1).
std::vector<int> exponents_at_index(std::size_t i) {
    std::vector<int> exps{0};
    if (i == 0) return exps;
    int degree = std::bit_width(i);
    std::size_t mask = i - (std::size_t(1) << (degree - 1));
    for (int e = 1; e < degree; ++e)
        if (mask & (std::size_t(1) << (e - 1))) exps.push_back(e);
    exps.push_back(degree);
    return exps;
}

}  // namespace

OracleTable::OracleTable(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 0) throw std::domain_error("oracle degree must be >= 0");
    if (max_degree > kOracleDegreeGuard)
        throw std::domain_error("oracle degree exceeds the resource guard of " +
                                std::to_string(kOracleDegreeGuard));

    std::vector<std::uint64_t> pow3(static_cast<std::size_t>(max_degree) + 1);
    pow3[0] = 1;
    for (std::size_t e = 1; e < pow3.size(); ++e) pow3[e] = 3 * pow3[e - 1];

    values_.push_back(1);
    // Value at index i: strip the lowest interior bit and add its power, so
    // each entry costs O(1).
    std::vector<std::uint64_t> mask_value;
    for (int r = 1; r <= max_degree; ++r) {
        std::uint64_t base = 1 + pow3[static_cast<std::size_t>(r)];
        std::uint32_t masks = std::uint32_t(1) << (r - 1);
        mask_value.assign(masks, 0);
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            if (mask != 0) {
                int low = std::countr_zero(mask);
                mask_value[mask] =
                    mask_value[mask & (mask - 1)] + pow3[static_cast<std::size_t>(low + 1)];
            }
            values_.push_back(base + mask_value[mask]);
        }
    }
}

std::vector<OracleHit> OracleTable::hits_for(const Nat& m) const {
    if (m % 3 != 1) throw std::domain_error("oracle search requires m == 1 (mod 3)");
    std::uint64_t mv = to_u64_checked(m, "m");
    std::vector<OracleHit> hits;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] % mv != 0) continue;
        Nat cofactor = Nat(values_[i] / mv);
        GeneralTernary t = to_ternary(cofactor);
        if (!t.digits_all_binary()) continue;
        NewmanPoly p = NewmanPoly::from_exponents(exponents_at_index(i));
        NewmanPoly q = NewmanPoly::from_ternary(TernaryString::from_digits_lsb(t.digits()));
        Classification cls = classify_pair(p, q);
        hits.push_back({std::move(p), std::move(q), std::move(cls)});
    }
    return hits;
}

std::vector<OracleHit> brute_force(const Nat& m, int max_degree) {
    return OracleTable(max_degree).hits_for(m);
}

nlohmann::ordered_json OracleHit::to_json(const Nat& m) const {
    TernaryString pt = p.to_ternary();
    TernaryString qt = q.to_ternary();
    nlohmann::ordered_json j;
    j["m"] = to_decimal(m);
    j["p_ternary"] = pt.msb_string();
    j["q_ternary"] = qt.msb_string();
    j["p"] = to_decimal(pt.value());
    j["q"] = to_decimal(qt.value());
    j["class"] = cls.is_universal() ? "universal" : "local";
    if (cls.is_universal())
        j["quotient"] = cls.quotient().text();
    else
        j["quotient"] = nullptr;
    j["source"] = "oracle";
    return j;
}

CrossCheckReport cross_check(const Nat& m, int max_degree, int max_len) {
    CrossCheckReport report{m, max_degree, max_len, 0, {}, {}};

    std::set<std::pair<std::string, std::string>> oracle_keys;
    for (const OracleHit& hit : brute_force(m, max_degree))
        oracle_keys.emplace(hit.p.to_ternary().msb_string(), hit.q.to_ternary().msb_string());

    std::set<std::pair<std::string, std::string>> walk_keys;
    for (const Representation& rep : all_reps_up_to_len(m, std::min(max_len, max_degree + 1)))
        walk_keys.emplace(rep.p().msb_string(), rep.q().msb_string());

    for (const auto& key : oracle_keys) {
        if (walk_keys.count(key))
            ++report.matched;
        else
            report.only_oracle.push_back(key);
    }
    for (const auto& key : walk_keys)
        if (!oracle_keys.count(key)) report.only_transducer.push_back(key);
    return report;
}

nlohmann::ordered_json CrossCheckReport::to_json() const {
    auto pairs = [](const std::vector<std::pair<std::string, std::string>>& v) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [p, q] : v) {
            nlohmann::ordered_json e;
            e["p_ternary"] = p;
            e["q_ternary"] = q;
            arr.push_back(e);
        }
        return arr;
    };
    nlohmann::ordered_json j;
    j["m"] = to_decimal(m);
    j["max_degree"] = max_degree;
    j["max_len"] = max_len;
    j["matched"] = matched;
    j["only_oracle"] = pairs(only_oracle);
    j["only_transducer"] = pairs(only_transducer);
    j["ok"] = ok();
    return j;
}

}  // namespace tpq
