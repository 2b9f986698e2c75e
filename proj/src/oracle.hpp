#ifndef TPQ_ORACLE_HPP
#define TPQ_ORACLE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "representation.hpp"

namespace tpq {

inline constexpr int kOracleDegreeGuard = 24;

struct OracleHit {
    NewmanPoly p;
    NewmanPoly q;
    Classification cls;

    nlohmann::ordered_json to_json(const Nat& m) const;
};

/// Independent search: walk every 0,1-polynomial p with constant term 1 and
/// deg p <= max_degree (by degree, then by increasing interior exponent
/// mask), keep those with p(3) == 0 (mod m) whose cofactor has only 0/1
/// ternary digits, and classify each pair by exact division. Requires
/// m == 1 (mod 3) and max_degree <= 24.
std::vector<OracleHit> brute_force(const Nat& m, int max_degree);

/// The degree-indexed table of p(3) values, built once and shared across
/// queries for many m.
class OracleTable {
public:
    explicit OracleTable(int max_degree);
    int max_degree() const { return max_degree_; }
    std::vector<OracleHit> hits_for(const Nat& m) const;
    std::size_t polynomial_count() const { return values_.size(); }

private:
    int max_degree_;
    // values_[i] = p(3) for the i-th polynomial in canonical order; the
    // exponent set is recovered from the index alone.
    std::vector<std::uint64_t> values_;
};

/// Set comparison between oracle hits with deg p <= max_degree and the
/// transducer-side representations (indecomposable walks plus compositions)
/// with at most max_degree + 1 digits in p.
struct CrossCheckReport {
    Nat m;
    int max_degree;
    int max_len;
    std::size_t matched = 0;
    std::vector<std::pair<std::string, std::string>> only_oracle;      // (p, q) ternary MSB
    std::vector<std::pair<std::string, std::string>> only_transducer;  // (p, q) ternary MSB

    bool ok() const { return only_oracle.empty() && only_transducer.empty(); }
    nlohmann::ordered_json to_json() const;
};

CrossCheckReport cross_check(const Nat& m, int max_degree, int max_len);

}  // namespace tpq

#endif
