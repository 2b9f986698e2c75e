#include "catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace tpq {

namespace {

nlohmann::ordered_json witness_json(const std::optional<Representation>& w) {
    if (!w) return nullptr;
    nlohmann::ordered_json j;
    j["p_ternary"] = w->p().msb_string();
    j["q_ternary"] = w->q().msb_string();
    return j;
}

std::optional<Representation> witness_from_json(const Nat& m, const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return Representation(m, TernaryString::parse_msb(j.at("p_ternary").get<std::string>()),
                          TernaryString::parse_msb(j.at("q_ternary").get<std::string>()));
}

// Runs fn(i) for i in [0, count) on the requested number of workers.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace

nlohmann::ordered_json CatalogRow::to_json() const {
    nlohmann::ordered_json j;
    j["m"] = to_decimal(m);
    j["search_len"] = search_len;
    j["oracle_degree"] = oracle_degree;
    j["universal"] = witness_json(universal);
    j["local"] = witness_json(local);
    return j;
}

CatalogRow CatalogRow::from_json(const nlohmann::json& j) {
    CatalogRow row;
    row.m = nat_from_decimal(j.at("m").get<std::string>());
    row.search_len = j.at("search_len").get<int>();
    row.oracle_degree = j.at("oracle_degree").get<int>();
    row.universal = witness_from_json(row.m, j.at("universal"));
    row.local = witness_from_json(row.m, j.at("local"));
    if (row.universal && !row.universal->is_universal())
        throw std::runtime_error("cached universal witness for m = " + to_decimal(row.m) +
                                 " classifies local");
    if (row.local && row.local->is_universal())
        throw std::runtime_error("cached local witness for m = " + to_decimal(row.m) +
                                 " classifies universal");
    return row;
}

bool CatalogRow::operator==(const CatalogRow& o) const {
    auto same = [](const std::optional<Representation>& a,
                   const std::optional<Representation>& b) {
        if (a.has_value() != b.has_value()) return false;
        return !a || (*a == *b);
    };
    return m == o.m && search_len == o.search_len && oracle_degree == o.oracle_degree &&
           same(universal, o.universal) && same(local, o.local);
}

CatalogRow classify_integer(const Nat& m, int max_len, int oracle_degree,
                            const OracleTable* shared_table) {
    if (m % 3 != 1) throw std::domain_error("catalog rows require m == 1 (mod 3)");
    if (!feasible_interval(m))
        throw std::domain_error("catalog rows require m inside a feasible interval");

    CatalogRow row{m, max_len, oracle_degree, std::nullopt, std::nullopt};
    for_each_indecomposable(m, max_len, [&](const Representation& rep) {
        if (rep.is_universal()) {
            if (!row.universal) row.universal = rep;
        } else if (!row.local) {
            row.local = rep;
        }
        return !(row.universal && row.local);
    });
    if (!row.universal || !row.local) {
        std::optional<OracleTable> own;
        const OracleTable* table = shared_table;
        if (!table || table->max_degree() < oracle_degree) {
            own.emplace(oracle_degree);
            table = &*own;
        }
        for (const OracleHit& hit : table->hits_for(m)) {
            if (hit.p.degree() > oracle_degree) continue;
            auto& slot = hit.cls.is_universal() ? row.universal : row.local;
            if (!slot)
                slot = Representation(m, hit.p.to_ternary(), hit.q.to_ternary());
            if (row.universal && row.local) break;
        }
    }
    return row;
}

std::vector<std::uint64_t> feasible_residue_one_up_to(std::uint64_t max_m) {
    std::vector<std::uint64_t> out;
    unsigned __int128 pow_r = 1;  // 3^r
    for (int r = 0;; ++r, pow_r *= 3) {
        // I_r = (2*3^(r-1), 3^(r+1)/2): integers 2*3^(r-1) + 1 ... (3^(r+1) - 1)/2.
        unsigned __int128 lo = r == 0 ? 1 : 2 * (pow_r / 3) + 1;
        unsigned __int128 hi = (3 * pow_r - 1) / 2;
        if (lo > max_m) break;
        std::uint64_t m = static_cast<std::uint64_t>(lo);
        while (m % 3 != 1) ++m;
        std::uint64_t top = static_cast<std::uint64_t>(std::min<unsigned __int128>(hi, max_m));
        for (; m <= top; m += 3) out.push_back(m);
    }
    return out;
}

std::vector<CatalogRow> build_catalog(const Nat& max_m, int max_len, int oracle_degree,
                                      int threads, const std::string& cache_path) {
    std::map<std::tuple<std::string, int, int>, CatalogRow> cache;
    if (!cache_path.empty())
        for (CatalogRow& row : load_rows(cache_path))
            cache.emplace(std::make_tuple(to_decimal(row.m), row.search_len, row.oracle_degree),
                          std::move(row));

    std::vector<std::uint64_t> ms = feasible_residue_one_up_to(to_u64_checked(max_m, "max_m"));
    std::vector<std::optional<CatalogRow>> slots(ms.size());
    OracleTable table(oracle_degree);
    parallel_for(ms.size(), threads, [&](std::size_t i) {
        Nat m = Nat(ms[i]);
        auto key = std::make_tuple(to_decimal(m), max_len, oracle_degree);
        if (auto it = cache.find(key); it != cache.end()) {
            slots[i] = it->second;
            return;
        }
        slots[i] = classify_integer(m, max_len, oracle_degree, &table);
    });

    std::vector<CatalogRow> rows;
    rows.reserve(ms.size());
    for (auto& slot : slots) rows.push_back(std::move(*slot));

    if (!cache_path.empty()) {
        for (const CatalogRow& row : rows)
            cache.insert_or_assign(
                std::make_tuple(to_decimal(row.m), row.search_len, row.oracle_degree), row);
        std::vector<CatalogRow> merged;
        merged.reserve(cache.size());
        for (auto& [key, row] : cache) merged.push_back(std::move(row));
        std::sort(merged.begin(), merged.end(), [](const CatalogRow& a, const CatalogRow& b) {
            if (a.m != b.m) return a.m < b.m;
            if (a.search_len != b.search_len) return a.search_len < b.search_len;
            return a.oracle_degree < b.oracle_degree;
        });
        save_rows(merged, cache_path);
    }
    return rows;
}

std::vector<Nat> scan_exceptions(const Nat& max_m, int threads) {
    std::vector<std::uint64_t> ms = feasible_residue_one_up_to(to_u64_checked(max_m, "max_m"));
    if (threads <= 1) {
        std::vector<Nat> out;
        ReachScratch scratch;
        for (std::uint64_t m : ms)
            if (!scratch.zero_reachable_from_t(m)) out.push_back(Nat(m));
        return out;
    }

    std::size_t workers = std::max(1, threads);
    std::vector<std::vector<Nat>> found(workers);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    // Contiguous chunks keep per-thread results ordered; concatenation in
    // chunk order restores the global order.
    std::size_t chunk = (ms.size() + workers - 1) / std::max<std::size_t>(workers, 1);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                ReachScratch scratch;
                std::size_t begin = w * chunk;
                std::size_t end = std::min(ms.size(), begin + chunk);
                for (std::size_t i = begin; i < end; ++i)
                    if (!scratch.zero_reachable_from_t(ms[i])) found[w].push_back(Nat(ms[i]));
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    std::vector<Nat> out;
    for (auto& part : found)
        for (auto& m : part) out.push_back(std::move(m));
    return out;
}

std::string render_markdown(const std::vector<CatalogRow>& rows) {
    std::string out = "| m | universal | local |\n|---|---|---|\n";
    for (const CatalogRow& row : rows) {
        out += "| " + to_decimal(row.m) + " | " + (row.universal ? "★" : "") + " | " +
               (row.local ? "★" : "") + " |\n";
    }
    return out;
}

std::string render_csv(const std::vector<CatalogRow>& rows) {
    std::string out =
        "m,universal,local,universal_witness_p,universal_witness_q,local_witness_p,"
        "local_witness_q,search_len,oracle_degree\n";
    auto status = [](const std::optional<Representation>& w) {
        return w ? "found" : "not_found_within_bound";
    };
    for (const CatalogRow& row : rows) {
        out += to_decimal(row.m);
        out += ",";
        out += status(row.universal);
        out += ",";
        out += status(row.local);
        out += ",";
        out += row.universal ? row.universal->p().msb_string() : "";
        out += ",";
        out += row.universal ? row.universal->q().msb_string() : "";
        out += ",";
        out += row.local ? row.local->p().msb_string() : "";
        out += ",";
        out += row.local ? row.local->q().msb_string() : "";
        out += ",";
        out += std::to_string(row.search_len);
        out += ",";
        out += std::to_string(row.oracle_degree);
        out += "\n";
    }
    return out;
}

void save_rows(const std::vector<CatalogRow>& rows, const std::string& path) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CatalogRow& row : rows) arr.push_back(row.to_json());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + path);
    out << arr.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed for cache file: " + path);
}

std::vector<CatalogRow> load_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {};
    nlohmann::json arr;
    try {
        in >> arr;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("cannot parse cache file " + path + ": " + e.what());
    }
    std::vector<CatalogRow> rows;
    for (const auto& j : arr) rows.push_back(CatalogRow::from_json(j));
    return rows;
}

}  // namespace tpq
