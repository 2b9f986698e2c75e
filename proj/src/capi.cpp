#include "tpq/tpq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "catalog.hpp"
#include "digraph.hpp"
#include "families.hpp"
#include "oracle.hpp"
#include "representation.hpp"

extern "C" {
struct tpq_digraph {
    tpq::CarryDigraph graph;
};
struct tpq_catalog {
    std::vector<tpq::CatalogRow> rows;
};
}

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** error_out, const std::string& message) {
    if (error_out) *error_out = dup_string(message);
}

// Maps C++ failures onto status codes at the boundary.
template <typename Fn>
tpq_status guarded(char** error_out, Fn&& fn) {
    if (error_out) *error_out = nullptr;
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        set_error(error_out, e.what());
        return TPQ_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        std::string what = e.what();
        set_error(error_out, what);
        if (what.find("resource guard") != std::string::npos ||
            what.find("machine-word") != std::string::npos)
            return TPQ_ERR_LIMIT;
        return TPQ_ERR_DOMAIN;
    } catch (const std::runtime_error& e) {
        set_error(error_out, e.what());
        return TPQ_ERR_IO;
    } catch (const std::bad_alloc&) {
        set_error(error_out, "out of memory");
        return TPQ_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(error_out, e.what());
        return TPQ_ERR_INTERNAL;
    }
}

tpq::Nat parse_m(const char* m_decimal) {
    if (!m_decimal) throw std::invalid_argument("null decimal string");
    return tpq::nat_from_decimal(m_decimal);
}

tpq_status emit(char** out, const std::string& text) {
    if (!out) return TPQ_ERR_INVALID_ARGUMENT;
    *out = dup_string(text);
    return *out ? TPQ_OK : TPQ_ERR_INTERNAL;
}

}  // namespace

const char* tpq_status_name(tpq_status status) {
    switch (status) {
        case TPQ_OK: return "ok";
        case TPQ_ERR_INVALID_ARGUMENT: return "invalid argument";
        case TPQ_ERR_DOMAIN: return "domain error";
        case TPQ_ERR_LIMIT: return "limit exceeded";
        case TPQ_ERR_IO: return "i/o error";
        default: return "internal error";
    }
}

const char* tpq_version(void) { return "0.1.0"; }

void tpq_string_free(char* s) { std::free(s); }

tpq_status tpq_decide(const char* m_decimal, int* representable_out, char** reason_out,
                      char** error_out) {
    return guarded(error_out, [&]() -> tpq_status {
        if (!representable_out || !reason_out) throw std::invalid_argument("null output pointer");
        tpq::Nat m = parse_m(m_decimal);
        if (m < 1) throw std::domain_error("m must be >= 1");
        std::string md = tpq::to_decimal(m);

        tpq::Normalized n = tpq::normalize(m);
        std::string core = tpq::to_decimal(n.core);
        if (n.core % 3 == 2) {
            *representable_out = 0;
            std::string why = md + " is not representable: ";
            why += n.pow3 > 0 ? md + " = 3^" + std::to_string(n.pow3) + " * " + core + " and " +
                                    core + " mod 3 == 2"
                              : core + " mod 3 == 2";
            return emit(reason_out, why);
        }
        if (!tpq::feasible_interval(n.core)) {
            *representable_out = 0;
            return emit(reason_out, md + " is not representable: " + core +
                                        " lies outside every feasible interval "
                                        "(2/3*3^r, 3/2*3^r)");
        }
        tpq::CarryDigraph g = tpq::build_digraph(n.core);
        if (!g.zero_reachable_from_t()) {
            *representable_out = 0;
            return emit(reason_out, md + " is not representable: no walk from carry " +
                                        tpq::to_decimal(g.t()) + " back to 0 in D_" + core);
        }
        *representable_out = 1;
        auto shortest = *g.shortest_walk_length();
        std::vector<tpq::Representation> reps =
            tpq::enumerate_indecomposable(n.core, static_cast<int>(shortest));
        const tpq::Representation& w = reps.front();
        std::string quotient = tpq::to_decimal(w.p_value()) + "/" + tpq::to_decimal(w.q_value()) +
                               " = [" + w.p().msb_string() + "]_3/[" + w.q().msb_string() + "]_3";
        std::string why = md + " is representable: ";
        why += n.pow3 > 0 ? md + " = 3^" + std::to_string(n.pow3) + " * " + core + " and " + core +
                                " = " + quotient
                          : core + " = " + quotient;
        return emit(reason_out, why);
    });
}

namespace {

// Walk counts grow exponentially in the length bound; keep the shared
// library usable from unsuspecting callers.
void check_len_guard(int max_len) {
    if (max_len < 1 || max_len > 64)
        throw std::domain_error("length bound outside the resource guard 1..64");
}

}  // namespace

tpq_status tpq_enumerate(const char* m_decimal, int max_len, int include_decomposable,
                         char** jsonl_out, char** error_out) {
    return guarded(error_out, [&]() -> tpq_status {
        check_len_guard(max_len);
        tpq::Nat m = parse_m(m_decimal);
        std::vector<tpq::Representation> reps =
            include_decomposable ? tpq::all_reps_up_to_len(m, max_len)
                                 : tpq::enumerate_indecomposable(m, max_len);
        std::string out;
        for (const tpq::Representation& r : reps) out += r.json_line() + "\n";
        return emit(jsonl_out, out);
    });
}

tpq_status tpq_classify(const char* m_decimal, const char* p_ternary, const char* q_ternary,
                        char** json_out, char** error_out) {
    return guarded(error_out, [&]() -> tpq_status {
        if (!p_ternary || !q_ternary) throw std::invalid_argument("null digit string");
        tpq::Nat m = parse_m(m_decimal);
        tpq::TernaryString p = tpq::TernaryString::parse_msb(p_ternary);
        tpq::TernaryString q = tpq::TernaryString::parse_msb(q_ternary);
        if (p.value() != m * q.value())
            throw std::domain_error("p(3) != m * q(3): [" + p.msb_string() + "]_3 = " +
                                    tpq::to_decimal(p.value()) + " but m * [" + q.msb_string() +
                                    "]_3 = " + tpq::to_decimal(m * q.value()));
        tpq::Representation rep(m, std::move(p), std::move(q));
        return emit(json_out, rep.json_line());
    });
}

tpq_status tpq_families(const char* m_decimal, char** jsonl_out, char** error_out) {
    return guarded(error_out, [&]() -> tpq_status {
        tpq::Nat m = parse_m(m_decimal);
        std::string out;
        for (const tpq::FamilyTag& tag : tpq::detect_families(m)) {
            nlohmann::ordered_json j;
            j["m"] = tpq::to_decimal(m);
            j["family"] = tag.kind_name();
            j["display"] = tag.display();
            j["r"] = tag.r;
            if (tag.kind == tpq::FamilyTag::Kind::kTwoPowerGap) j["s"] = tag.s;
            if (tag.kind == tpq::FamilyTag::Kind::kRepunit ||
                tag.kind == tpq::FamilyTag::Kind::kAlternating)
                j["k"] = tag.k;
            j["quotient"] = tpq::canonical_quotient(tag).text();
            out += j.dump() + "\n";
        }
        return emit(jsonl_out, out);
    });
}

tpq_status tpq_gen_3n2(int n, int k, char** json_out, char** error_out) {
    return guarded(error_out, [&]() -> tpq_status {
        return emit(json_out, tpq::gen_3n2(n, k).json_line());
    });
}

tpq_status tpq_gen_100(int j, char** json_out, char** error_out) {
    return guarded(error_out, [&]() -> tpq_status {
        return emit(json_out, tpq::gen_100(j).json_line());
    });
}

tpq_status tpq_oracle(const char* m_decimal, int max_degree, char** jsonl_out, char** error_out) {
    return guarded(error_out, [&]() -> tpq_status {
        tpq::Nat m = parse_m(m_decimal);
        std::string out;
        for (const tpq::OracleHit& hit : tpq::brute_force(m, max_degree))
            out += hit.to_json(m).dump() + "\n";
        return emit(jsonl_out, out);
    });
}

tpq_status tpq_cross_check(const char* m_decimal, int max_degree, int max_len, char** json_out,
                           char** error_out) {
    return guarded(error_out, [&]() -> tpq_status {
        check_len_guard(max_len);
        tpq::Nat m = parse_m(m_decimal);
        return emit(json_out, tpq::cross_check(m, max_degree, max_len).to_json().dump());
    });
}

tpq_status tpq_scan_exceptions(const char* max_m_decimal, int threads, char** jsonl_out,
                               char** error_out) {
    return guarded(error_out, [&]() -> tpq_status {
        tpq::Nat max_m = parse_m(max_m_decimal);
        std::string out;
        for (const tpq::Nat& m : tpq::scan_exceptions(max_m, threads)) {
            nlohmann::ordered_json j;
            j["m"] = tpq::to_decimal(m);
            out += j.dump() + "\n";
        }
        return emit(jsonl_out, out);
    });
}

tpq_status tpq_digraph_build(const char* m_decimal, tpq_digraph** digraph_out, char** error_out) {
    return guarded(error_out, [&]() -> tpq_status {
        if (!digraph_out) throw std::invalid_argument("null output pointer");
        tpq::Nat m = parse_m(m_decimal);
        auto* handle = new tpq_digraph{tpq::build_digraph(m)};
        *digraph_out = handle;
        return TPQ_OK;
    });
}

void tpq_digraph_free(tpq_digraph* g) { delete g; }

size_t tpq_digraph_vertex_count(const tpq_digraph* g) {
    return g ? g->graph.vertices().size() : 0;
}

size_t tpq_digraph_coreachable_count(const tpq_digraph* g) {
    return g ? g->graph.coreachable_count() : 0;
}

int tpq_digraph_is_representable(const tpq_digraph* g) {
    return g && g->graph.zero_reachable_from_t() ? 1 : 0;
}

tpq_status tpq_digraph_dot(const tpq_digraph* g, int pruned, char** dot_out, char** error_out) {
    return guarded(error_out, [&]() -> tpq_status {
        if (!g) throw std::invalid_argument("null digraph handle");
        return emit(dot_out, g->graph.to_dot(pruned != 0));
    });
}

tpq_status tpq_catalog_build(const char* max_m_decimal, int max_len, int oracle_degree,
                             const char* cache_path, int threads, tpq_catalog** catalog_out,
                             char** error_out) {
    return guarded(error_out, [&]() -> tpq_status {
        if (!catalog_out) throw std::invalid_argument("null output pointer");
        check_len_guard(max_len);
        tpq::Nat max_m = parse_m(max_m_decimal);
        auto* handle = new tpq_catalog{tpq::build_catalog(
            max_m, max_len, oracle_degree, threads, cache_path ? cache_path : std::string())};
        *catalog_out = handle;
        return TPQ_OK;
    });
}

void tpq_catalog_free(tpq_catalog* c) { delete c; }

size_t tpq_catalog_row_count(const tpq_catalog* c) { return c ? c->rows.size() : 0; }

tpq_status tpq_catalog_render(const tpq_catalog* c, const char* format, char** text_out,
                              char** error_out) {
    return guarded(error_out, [&]() -> tpq_status {
        if (!c) throw std::invalid_argument("null catalog handle");
        std::string fmt = format ? format : "";
        if (fmt == "md") return emit(text_out, tpq::render_markdown(c->rows));
        if (fmt == "csv") return emit(text_out, tpq::render_csv(c->rows));
        if (fmt == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const tpq::CatalogRow& row : c->rows) arr.push_back(row.to_json());
            return emit(text_out, arr.dump(2) + "\n");
        }
        throw std::invalid_argument("unknown catalog format: \"" + fmt + "\"");
    });
}

tpq_status tpq_catalog_save(const tpq_catalog* c, const char* path, char** error_out) {
    return guarded(error_out, [&]() -> tpq_status {
        if (!c) throw std::invalid_argument("null catalog handle");
        if (!path) throw std::invalid_argument("null path");
        tpq::save_rows(c->rows, path);
        return TPQ_OK;
    });
}
