// Acceptance suite: runs every criterion end to end and prints one
// [PASS]/[FAIL] line each. Exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "families.hpp"
#include "oracle.hpp"

using namespace tpq;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    bool pass = false;
    std::string note;
    auto start = std::chrono::steady_clock::now();
    try {
        pass = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s%s (%.2fs)\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), note.c_str(), secs);
    if (!pass) ++failures;
}

bool expect(bool ok, const std::string& what) {
    if (!ok) std::printf("       mismatch: %s\n", what.c_str());
    return ok;
}

struct TableRow {
    int m;
    bool universal;
    bool local;
};

// The desk-scale classification table: every feasible integer == 1 (mod 3)
// up to 364, with the kinds of representations it is known to have. The one
// open cell (local representations of 289) is recorded as "not found".
const std::vector<TableRow> kTable = {
    {1, true, false},    {4, true, false},    {7, true, false},    {10, true, false},
    {13, true, false},   {19, true, false},   {22, false, true},   {25, true, false},
    {28, true, false},   {31, true, true},    {34, false, true},   {37, true, true},
    {40, true, false},   {55, true, false},   {58, false, true},   {61, true, false},
    {64, true, true},    {67, false, true},   {70, true, true},    {73, true, false},
    {76, true, true},    {79, true, false},   {82, true, false},   {85, true, true},
    {88, true, true},    {91, true, false},   {94, true, true},    {97, false, true},
    {100, true, false},  {103, false, true},  {106, false, true},  {109, true, true},
    {112, true, true},   {115, false, true},  {118, true, true},   {121, true, false},
    {163, true, false},  {166, false, true},  {169, true, true},   {172, false, true},
    {175, false, true},  {178, false, true},  {181, true, false},  {184, false, true},
    {187, true, true},   {190, true, true},   {193, false, true},  {196, true, true},
    {199, false, true},  {202, false, true},  {205, false, true},  {208, false, true},
    {211, true, true},   {214, false, true},  {217, true, false},  {220, true, true},
    {223, true, true},   {226, false, true},  {229, false, true},  {232, false, true},
    {235, true, false},  {238, false, true},  {241, true, false},  {244, true, false},
    {247, true, true},   {250, true, true},   {253, true, true},   {256, true, true},
    {259, false, true},  {262, false, true},  {265, false, true},  {268, false, true},
    {271, true, true},   {274, true, true},   {277, false, true},  {280, true, true},
    {283, true, true},   {286, false, true},  {289, true, false},  {292, true, true},
    {295, false, true},  {298, false, true},  {301, true, true},   {304, false, true},
    {307, false, true},  {310, false, true},  {313, false, true},  {316, true, true},
    {319, true, true},   {322, false, true},  {325, true, true},   {328, true, true},
    {331, false, true},  {334, true, true},   {337, true, true},   {340, false, true},
    {343, false, true},  {346, false, true},  {349, false, true},  {352, true, true},
    {355, true, true},   {358, false, true},  {361, true, true},   {364, true, false},
};

bool check_rep(const std::vector<Representation>& reps, std::size_t index, const char* p,
               const char* q) {
    if (index >= reps.size()) return expect(false, std::string("missing item for p = ") + p);
    return expect(reps[index].p().msb_string() == p && reps[index].q().msb_string() == q,
                  std::string("expected ") + p + "/" + q + ", got " +
                      reps[index].p().msb_string() + "/" + reps[index].q().msb_string());
}

bool criterion_scan() {
    auto start = std::chrono::steady_clock::now();
    bool ok = expect(scan_exceptions(1000) == std::vector<Nat>{529, 592, 601, 616},
                     "exceptions up to 1000");
    ok &= expect(scan_exceptions(500).empty(), "no exceptions up to 500");
    ok &= expect(scan_exceptions(6000) == std::vector<Nat>{529, 592, 601, 616, 5368},
                 "exceptions up to 6000");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ok && expect(secs < 10.0, "single-threaded scan under 10 s");
}

bool criterion_worked_quotients() {
    bool ok = true;

    auto seven = enumerate_indecomposable(7, 8);
    auto twenty_two = enumerate_indecomposable(22, 10);
    auto hundred = enumerate_indecomposable(100, 9);
    auto sixty_four = enumerate_indecomposable(64, 10);
    if (seven.empty() || twenty_two.size() != 2 || hundred.size() != 2 || sixty_four.empty())
        return expect(false, "wrong walk counts");

    ok &= check_rep(seven, 0, "1001", "11");
    ok &= expect(seven[0].p_value() == 28 && seven[0].q_value() == 4, "7 = 28/4");

    ok &= check_rep(twenty_two, 0, "1010011", "1101");
    ok &= check_rep(twenty_two, 1, "1010110011", "1101101");

    ok &= check_rep(hundred, 0, "1101001", "101");
    ok &= check_rep(hundred, 1, "110111001", "10101");
    ok &= expect(hundred[0].p_value() == 1000 && hundred[0].q_value() == 10, "100 = 1000/10");
    ok &= expect(hundred[1].p_value() == 9100 && hundred[1].q_value() == 91, "100 = 9100/91");

    ok &= check_rep(sixty_four, 0, "100111", "11");
    ok &= expect(sixty_four[0].p_value() == 256 && sixty_four[0].q_value() == 4, "64 = 256/4");
    ok &= expect(sixty_four[0].is_universal() &&
                     sixty_four[0].classification().quotient() ==
                         IntPoly::parse("x^4 - x^3 + x^2 + 1"),
                 "256/4 universal with quotient x^4 - x^3 + x^2 + 1");
    bool found_local = false;
    for (const Representation& r : sixty_four)
        if (r.p().msb_string() == "1011011111" && r.q().msb_string() == "111011")
            found_local = !r.is_universal();
    ok &= expect(found_local, "64 = 22720/355 enumerated and local");
    return ok;
}

bool criterion_local_only() {
    bool ok = true;
    for (int m : {22, 34}) {
        auto reps = enumerate_indecomposable(m, 24);
        ok &= expect(!reps.empty(), "walks exist for m = " + std::to_string(m));
        for (const Representation& r : reps)
            ok &= expect(!r.is_universal(), "indecomposable local for m = " + std::to_string(m));
        for (const Representation& a : reps)
            for (const Representation& b : reps) {
                Representation c = compose_decomposable({a, b}, {});
                ok &= expect(!c.is_universal(),
                             "composition local for m = " + std::to_string(m));
            }
    }
    return ok;
}

bool criterion_100_universal() {
    IntPoly quotient = IntPoly::parse("x^4 + x^3 - x^2 + 1");
    auto reps = enumerate_indecomposable(100, 24);
    bool ok = expect(reps.size() == 9, "nine indecomposable walks for 100 at length 24");
    for (const Representation& r : reps)
        ok &= expect(r.is_universal() && r.classification().quotient() == quotient,
                     "indecomposable universal with the fixed quotient");
    for (std::size_t i = 0; i < reps.size() && i < 3; ++i)
        for (std::size_t j = 0; j < reps.size() && j < 3; ++j)
            for (int loops : {0, 1, 2}) {
                Representation c = compose_decomposable({reps[i], reps[j]}, {loops});
                ok &= expect(c.is_universal() && c.classification().quotient() == quotient,
                             "composition universal with the fixed quotient");
            }
    return ok;
}

bool criterion_family_coverage() {
    const std::set<std::uint64_t> covered{4,  7,  10, 13, 19, 25, 28, 40,
                                          55, 61, 73, 79, 82, 91, 121};
    const std::set<std::uint64_t> infeasible{16, 43, 46, 49, 52};
    bool ok = true;
    for (std::uint64_t m = 1; m <= 121; m += 3) {
        ok &= expect(detect_families(Nat(m)).empty() == (covered.count(m) == 0),
                     "family coverage at m = " + std::to_string(m));
        ok &= expect(feasible_interval(Nat(m)).has_value() == (infeasible.count(m) == 0),
                     "feasibility at m = " + std::to_string(m));
    }
    return ok;
}

bool criterion_3n2() {
    bool ok = true;
    for (int n = 3; n <= 8; ++n) {
        Nat m = pow3(static_cast<unsigned>(n)) - 2;
        IntPoly quotient = IntPoly::monomial(static_cast<unsigned>(n)) -
                           IntPoly::monomial(1) + IntPoly::constant(1);
        for (int k = 0; k <= 5; ++k) {
            Representation rep = gen_3n2(n, k);
            ok &= expect(rep.p_value() == m * rep.q_value(),
                         "identity at n=" + std::to_string(n) + ",k=" + std::to_string(k));
            ok &= expect(rep.is_universal() && rep.classification().quotient() == quotient,
                         "quotient x^n - x + 1 at n=" + std::to_string(n));
            bool found = false;
            for (const Representation& e : enumerate_indecomposable(m, 2 * n + k))
                if (e == rep) found = true;
            ok &= expect(found, "generator appears in enumeration at n=" + std::to_string(n) +
                                    ",k=" + std::to_string(k));
        }
    }
    return ok;
}

bool criterion_catalog() {
    auto rows = build_catalog(364, 24, 18);
    bool ok = expect(rows.size() == kTable.size(), "one row per feasible integer");
    if (!ok) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const TableRow& want = kTable[i];
        ok &= expect(rows[i].m == want.m, "row order at m = " + std::to_string(want.m));
        ok &= expect(rows[i].universal.has_value() == want.universal,
                     "universal cell at m = " + std::to_string(want.m));
        ok &= expect(rows[i].local.has_value() == want.local,
                     "local cell at m = " + std::to_string(want.m));
    }
    return ok;
}

bool criterion_oracle_equivalence() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (std::uint64_t m : feasible_residue_one_up_to(121)) {
        CrossCheckReport report = cross_check(Nat(m), 14, 15);
        ok &= expect(report.ok(), "cross-check discrepancy at m = " + std::to_string(m));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ok && expect(secs < 60.0, "oracle equivalence under 60 s");
}

bool delta_criterion_exhaustive() {
    // All Newman polynomials of degree <= 10, both routes on every pair.
    std::vector<NewmanPoly> polys{NewmanPoly::one()};
    for (int r = 1; r <= 10; ++r)
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << (r - 1)); ++mask) {
            std::vector<int> exps{0};
            for (int e = 1; e < r; ++e)
                if (mask & (std::uint32_t(1) << (e - 1))) exps.push_back(e);
            exps.push_back(r);
            polys.push_back(NewmanPoly::from_exponents(std::move(exps)));
        }
    std::vector<int> coeffs(24, 0);
    for (const NewmanPoly& s : polys)
        for (const NewmanPoly& t : polys) {
            std::fill(coeffs.begin(), coeffs.end(), 0);
            bool direct = true;
            for (int a : s.exponents())
                for (int b : t.exponents())
                    if (++coeffs[static_cast<std::size_t>(a + b)] > 1) direct = false;
            if (product_is_newman(s, t) != direct) return false;
        }
    return true;
}

bool injectivity_suites() {
    // Standard digits {0,1,2}: distinct canonical strings, distinct values.
    std::vector<long long> values;
    std::function<void(std::vector<int>&, int, const std::vector<int>&)> rec =
        [&](std::vector<int>& seq, int max_len, const std::vector<int>& digits) {
            if (!seq.empty() && seq.back() != 0) {
                long long v = 0;
                for (auto it = seq.rbegin(); it != seq.rend(); ++it) v = v * 3 + *it;
                values.push_back(v);
            }
            if (static_cast<int>(seq.size()) == max_len) return;
            for (int d : digits) {
                seq.push_back(d);
                rec(seq, max_len, digits);
                seq.pop_back();
            }
        };
    std::vector<int> seq;
    rec(seq, 12, {0, 1, 2});
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) return false;

    // Digits {-1,0,1,2}: any value hit by a {0,1} string is hit by no other
    // string. (Unrestricted injectivity fails: [-1,1] and [2] share value 2.)
    std::map<long long, int> value_count;
    std::function<void(std::vector<int>&)> rec4 = [&](std::vector<int>& s) {
        if (!s.empty() && s.back() != 0) {
            long long v = 0;
            for (auto it = s.rbegin(); it != s.rend(); ++it) v = v * 3 + *it;
            ++value_count[v];
        }
        if (s.size() == 8) return;
        for (int d : {-1, 0, 1, 2}) {
            s.push_back(d);
            rec4(s);
            s.pop_back();
        }
    };
    std::vector<int> s;
    rec4(s);
    ++value_count[0];  // the empty string
    for (std::uint64_t n = 1; n < (std::uint64_t(1) << 8); ++n) {
        // n's bits give a {0,1} digit string of length <= 8.
        long long v = 0;
        for (int bit = 7; bit >= 0; --bit) v = v * 3 + ((n >> bit) & 1);
        if (value_count[v] != 1) return false;
    }
    return true;
}

bool divrem_random_suite() {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> pdeg(0, 30);
    for (int iter = 0; iter < 10000; ++iter) {
        int dp = pdeg(rng);
        std::uniform_int_distribution<int> qdeg(0, dp);
        int dq = qdeg(rng);
        std::vector<Int> pc(static_cast<std::size_t>(dp) + 1), qc(static_cast<std::size_t>(dq) + 1);
        for (auto& c : pc) c = coeff(rng);
        for (auto& c : qc) c = coeff(rng);
        qc.back() = 1;
        IntPoly p(pc), q(qc);
        DivRem dr = divrem(p, q);
        if (!(q * dr.quotient + dr.remainder == p)) return false;
        if (dr.remainder.degree() >= q.degree()) return false;
    }
    return true;
}

bool vertex_bound_suite() {
    // CarryDigraph::build asserts the floor(m/2) bound on every vertex it
    // interns; a violation throws and fails the criterion.
    for (std::uint64_t m = 1; m <= 100000; m += 3) {
        CarryDigraph g = CarryDigraph::build(m);
        if (!g.vertices().empty() && g.vertices().back() > m / 2) return false;
    }
    return true;
}

bool criterion_property_suites() {
    bool ok = expect(delta_criterion_exhaustive(), "gap-set criterion, exhaustive to degree 10");
    ok &= expect(injectivity_suites(), "digit-value injectivity");
    ok &= expect(divrem_random_suite(), "division on 10^4 random monic instances");
    ok &= expect(vertex_bound_suite(), "vertex bound below 10^5");
    return ok;
}

bool criterion_identities() {
    bool ok = true;

    // p = q * (x^3 - x^2 + x + 1) + x^3 (x - 3), exactly; the split is not a
    // Euclidean division (its remainder has degree 4), so the identity is
    // checked by exact arithmetic and divrem supplies the divisibility facts.
    IntPoly p = IntPoly::parse("x^6 + x^4 + x + 1");
    IntPoly q = IntPoly::parse("x^3 + x^2 + 1");
    IntPoly g = IntPoly::parse("x^3 - x^2 + x + 1");
    IntPoly r = p - q * g;
    ok &= expect(r == IntPoly::parse("x^4 - 3x^3"), "identity residue is x^4 - 3x^3");
    ok &= expect(divrem(r, IntPoly::parse("x - 3")).remainder.is_zero(),
                 "identity residue divisible by x - 3");
    DivRem dr = divrem(p, q);
    ok &= expect(!dr.remainder.is_zero() && q * dr.quotient + dr.remainder == p,
                 "q does not divide p but division reconstructs it");

    Representation r31(31, TernaryString::parse_msb("1100000111"),
                       TernaryString::parse_msb("1011101"));
    ok &= expect(r31.p_value() == 26257 && r31.q_value() == 847, "26257/847 = 31");
    ok &= expect(!r31.is_universal(), "26257/847 local");

    Representation r37(37, TernaryString::parse_msb("111000000111"),
                       TernaryString::parse_msb("100111011"));
    ok &= expect(r37.p_value() == 255892 && r37.q_value() == 6916, "255892/6916 = 37");
    ok &= expect(!r37.is_universal(), "255892/6916 local");

    Representation r205(205, TernaryString::parse_msb("1010101"), TernaryString::parse_msb("11"));
    ok &= expect(r205.p_value() == 820 && r205.q_value() == 4, "820/4 = 205");
    ok &= expect(!r205.is_universal(), "820/4 local (x + 1 does not divide)");
    return ok;
}

}  // namespace

int main() {
    criterion(1, "non-representable scan matches and is fast", criterion_scan);
    criterion(2, "worked quotients reproduce digit for digit", criterion_worked_quotients);
    criterion(3, "22 and 34 are local-only at depth 24", criterion_local_only);
    criterion(4, "100 is universal-only with one quotient at depth 24", criterion_100_universal);
    criterion(5, "family coverage and feasibility lists below 121", criterion_family_coverage);
    criterion(6, "3^n - 2 generators verify, divide and enumerate", criterion_3n2);
    criterion(7, "catalog to 364 matches the classification table", criterion_catalog);
    criterion(8, "oracle and transducer agree below 121", criterion_oracle_equivalence);
    criterion(9, "algebraic and structural property suites", criterion_property_suites);
    criterion(10, "named identity checks", criterion_identities);
    if (failures == 0)
        std::printf("all 10 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
