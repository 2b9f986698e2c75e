#ifndef TPQ_CATALOG_HPP
#define TPQ_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracle.hpp"
#include "representation.hpp"

namespace tpq {

/// Classification summary for one integer. An absent witness means "not
/// found within the stated search bounds" and never claims nonexistence.
struct CatalogRow {
    Nat m;
    int search_len = 0;
    int oracle_degree = 0;
    std::optional<Representation> universal;
    std::optional<Representation> local;

    nlohmann::ordered_json to_json() const;
    static CatalogRow from_json(const nlohmann::json& j);
    bool operator==(const CatalogRow& o) const;
};

/// Searches indecomposable walks up to max_len (in canonical order), then
/// oracle hits up to oracle_degree, for one universal and one local witness.
/// Requires m == 1 (mod 3) and feasible. A prebuilt table of at least
/// oracle_degree may be shared across calls.
CatalogRow classify_integer(const Nat& m, int max_len, int oracle_degree,
                            const OracleTable* shared_table = nullptr);

/// Rows for every feasible m == 1 (mod 3) up to max_m, ascending. When a
/// cache path is given, rows already present under the same
/// (m, search_len, oracle_degree) key are reused, and the merged result is
/// written back.
std::vector<CatalogRow> build_catalog(const Nat& max_m, int max_len, int oracle_degree,
                                      int threads = 1, const std::string& cache_path = {});

/// All feasible m == 1 (mod 3) up to max_m with no representation, in
/// increasing order.
std::vector<Nat> scan_exceptions(const Nat& max_m, int threads = 1);

/// Ascending feasible integers == 1 (mod 3) up to max_m.
std::vector<std::uint64_t> feasible_residue_one_up_to(std::uint64_t max_m);

std::string render_markdown(const std::vector<CatalogRow>& rows);
std::string render_csv(const std::vector<CatalogRow>& rows);

void save_rows(const std::vector<CatalogRow>& rows, const std::string& path);
std::vector<CatalogRow> load_rows(const std::string& path);  // empty if file absent

}  // namespace tpq

#endif
