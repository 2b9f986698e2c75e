#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <set>

#include "catalog.hpp"

using namespace tpq;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const char* name)
        : path((std::filesystem::temp_directory_path() / name).string()) {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("classifying single integers") {
    SUBCASE("31 has both kinds") {
        CatalogRow row = classify_integer(31, 24, 18);
        REQUIRE(row.universal.has_value());
        REQUIRE(row.local.has_value());
        CHECK(row.universal->q_value() == 1);  // trivial witness found first
    }
    SUBCASE("22 is local only within bounds") {
        CatalogRow row = classify_integer(22, 24, 18);
        CHECK_FALSE(row.universal.has_value());
        REQUIRE(row.local.has_value());
        CHECK(row.local->p_value() == 814);
        CHECK(row.local->q_value() == 37);
    }
    SUBCASE("289 finds a universal witness and no local one") {
        CatalogRow row = classify_integer(289, 24, 18);
        CHECK(row.universal.has_value());
        CHECK_FALSE(row.local.has_value());
    }
    CHECK_THROWS_AS(classify_integer(23, 24, 18), std::domain_error);
    CHECK_THROWS_AS(classify_integer(16, 24, 18), std::domain_error);
}

TEST_CASE("feasible candidate generation") {
    auto ms = feasible_residue_one_up_to(364);
    CHECK(ms.size() == 104);
    CHECK(ms.front() == 1);
    CHECK(ms.back() == 364);
    for (std::uint64_t m : {16ull, 43ull, 46ull, 49ull, 52ull, 124ull, 160ull})
        CHECK(std::find(ms.begin(), ms.end(), m) == ms.end());
    CHECK(feasible_residue_one_up_to(1) == std::vector<std::uint64_t>{1});
}

TEST_CASE("catalog construction") {
    SUBCASE("single row for max_m = 1") {
        auto rows = build_catalog(1, 8, 6);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].m == 1);
        REQUIRE(rows[0].universal.has_value());
        CHECK(rows[0].universal->p_value() == 1);
        CHECK(rows[0].universal->q_value() == 1);
        CHECK_FALSE(rows[0].local.has_value());
    }
    SUBCASE("rows are exactly the feasible residue-one integers") {
        auto rows = build_catalog(121, 12, 10);
        CHECK(rows.size() == 36);
        for (const CatalogRow& row : rows) {
            CHECK(row.m % 3 == 1);
            CHECK(feasible_interval(row.m).has_value());
        }
    }
    SUBCASE("threads do not change the result") {
        auto seq = build_catalog(121, 12, 10, 1);
        auto par = build_catalog(121, 12, 10, 4);
        REQUIRE(seq.size() == par.size());
        for (std::size_t i = 0; i < seq.size(); ++i) REQUIRE(seq[i] == par[i]);
    }
}

TEST_CASE("deeper searches never lose a witness") {
    auto shallow = build_catalog(121, 10, 6);
    auto deep = build_catalog(121, 14, 10);
    REQUIRE(shallow.size() == deep.size());
    for (std::size_t i = 0; i < shallow.size(); ++i) {
        if (shallow[i].universal) CHECK(deep[i].universal.has_value());
        if (shallow[i].local) CHECK(deep[i].local.has_value());
    }
}

TEST_CASE("rendering") {
    auto rows = build_catalog(22, 24, 14);
    SUBCASE("markdown matches the star convention") {
        std::string md = render_markdown(rows);
        CHECK(md.find("| 22 |  | ★ |") != std::string::npos);
        CHECK(md.find("| 7 | ★ |  |") != std::string::npos);
    }
    SUBCASE("markdown of no rows is just the header") {
        CHECK(render_markdown({}) == "| m | universal | local |\n|---|---|---|\n");
    }
    SUBCASE("csv carries witnesses and bounds") {
        std::string csv = render_csv(rows);
        CHECK(csv.find("m,universal,local,universal_witness_p,universal_witness_q,"
                       "local_witness_p,local_witness_q,search_len,oracle_degree\n") == 0);
        CHECK(csv.find("22,not_found_within_bound,found,,,1010011,1101,24,14\n") !=
              std::string::npos);
    }
}

TEST_CASE("cache round trip and reuse") {
    TempFile cache("tpq_test_cache.json");
    auto rows = build_catalog(40, 12, 10, 1, cache.path);

    SUBCASE("save/load is lossless") {
        auto loaded = load_rows(cache.path);
        REQUIRE(loaded.size() == rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) REQUIRE(loaded[i] == rows[i]);
    }
    SUBCASE("rebuilding from the cache reproduces the rows") {
        auto again = build_catalog(40, 12, 10, 1, cache.path);
        REQUIRE(again.size() == rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) REQUIRE(again[i] == rows[i]);
    }
    SUBCASE("deeper bounds extend the cache instead of overwriting") {
        build_catalog(40, 14, 10, 1, cache.path);
        auto all = load_rows(cache.path);
        CHECK(all.size() == 2 * rows.size());  // both (12,10) and (14,10) keys
    }
    SUBCASE("missing file loads as empty") {
        CHECK(load_rows("/nonexistent/path/cache.json").empty());
    }
    SUBCASE("unwritable cache path surfaces as an error") {
        CHECK_THROWS_AS(build_catalog(4, 8, 6, 1, "/nonexistent/dir/cache.json"),
                        std::runtime_error);
    }
}

TEST_CASE("the full catalog survives a cache round trip") {
    TempFile cache("tpq_test_cache_364.json");
    auto rows = build_catalog(364, 24, 18, 2);
    save_rows(rows, cache.path);
    auto loaded = load_rows(cache.path);
    REQUIRE(loaded.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) REQUIRE(loaded[i] == rows[i]);
}

TEST_CASE("exception scan") {
    SUBCASE("nothing below 500") {
        CHECK(scan_exceptions(500).empty());
    }
    SUBCASE("the four below 1000") {
        auto ex = scan_exceptions(1000);
        CHECK(ex == std::vector<Nat>{529, 592, 601, 616});
    }
    SUBCASE("threads preserve order and content") {
        CHECK(scan_exceptions(6000, 3) == std::vector<Nat>{529, 592, 601, 616, 5368});
    }
}

TEST_CASE("scan soundness at small scale") {
    auto exceptions = scan_exceptions(1000);
    std::set<std::uint64_t> missing;
    for (const Nat& m : exceptions) missing.insert(static_cast<std::uint64_t>(m));
    for (std::uint64_t m : feasible_residue_one_up_to(1000)) {
        CarryDigraph g = CarryDigraph::build(m);
        if (missing.count(m)) {
            CHECK(enumerate_indecomposable(Nat(m), 30).empty());
            CHECK_FALSE(g.zero_reachable_from_t());
        } else {
            auto len = g.shortest_walk_length();
            REQUIRE(len.has_value());
            auto reps = enumerate_indecomposable(Nat(m), static_cast<int>(*len));
            REQUIRE_FALSE(reps.empty());  // construction verified the witness
        }
    }
}
