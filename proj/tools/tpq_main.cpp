// tpq command line front end. Talks to the library exclusively through the
// C API in tpq/tpq.h; all structured output comes preformatted from there.

#include <tpq/tpq.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { tpq_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out += c;
        }
    }
    return out;
}

// Domain violations are data: they land on stdout as one JSON object and the
// process still exits 0. Everything else is a process error.
int report(tpq_status status, const OwnedString& error) {
    switch (status) {
        case TPQ_OK:
            return 0;
        case TPQ_ERR_DOMAIN:
            std::cout << "{\"error\":\"" << json_escape(error.str()) << "\"}\n";
            return 0;
        case TPQ_ERR_INVALID_ARGUMENT:
        case TPQ_ERR_LIMIT:
            std::cerr << "error: " << error.str() << "\n";
            return kExitUsage;
        case TPQ_ERR_IO:
            std::cerr << "error: " << error.str() << "\n";
            return kExitIo;
        default:
            std::cerr << "internal error: " << error.str() << "\n";
            return kExitInternal;
    }
}

int print_or_report(tpq_status status, const OwnedString& text, const OwnedString& error) {
    if (status == TPQ_OK) {
        std::cout << text.str();
        return 0;
    }
    return report(status, error);
}

std::string resolve_cache_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("TPQ_CACHE_DIR");
    if (!dir || !*dir) return path;
    std::string d = dir;
    if (d.back() != '/') d += '/';
    return d + path;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"representations of integers as quotients of sums of distinct powers of 3"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("tpq ") + tpq_version());
    app.failure_message(CLI::FailureMessage::simple);

    std::string m, p_str, q_str, out_path, cache_path, format = "md", max_m;
    int max_len = 24, max_degree = 18, oracle_degree = 18, n = 3, k = 0, j = 0, threads = 1;
    bool decomposable = false, full = false, pruned = false;

    auto* cmd_decide = app.add_subcommand("decide", "decide whether m is representable");
    cmd_decide->add_option("m", m, "integer to decide")->required();

    auto* cmd_enum = app.add_subcommand("enumerate", "list representations as JSON lines");
    cmd_enum->add_option("m", m)->required();
    cmd_enum->add_option("--max-len", max_len, "largest digit count of p")
        ->required()
        ->check(CLI::Range(1, 64));
    cmd_enum->add_flag("--decomposable", decomposable, "include compositions");

    auto* cmd_classify = app.add_subcommand("classify", "classify a representation p/q of m");
    cmd_classify->add_option("m", m)->required();
    cmd_classify->add_option("p", p_str, "digits of p, most significant first")->required();
    cmd_classify->add_option("q", q_str, "digits of q, most significant first")->required();

    auto* cmd_digraph = app.add_subcommand("digraph", "write the carry digraph as Graphviz DOT");
    cmd_digraph->add_option("m", m)->required();
    auto* full_flag = cmd_digraph->add_flag("--full", full, "keep vertices that cannot reach 0");
    cmd_digraph->add_flag("--pruned", pruned, "keep only vertices that reach 0 (default)")
        ->excludes(full_flag);
    cmd_digraph->add_option("--out", out_path, "output file")->required();

    auto* cmd_families = app.add_subcommand("families", "closed-form families containing m");
    cmd_families->add_option("m", m)->required();

    auto* cmd_3n2 = app.add_subcommand("gen-3n2", "closed-form representation of 3^n - 2");
    cmd_3n2->add_option("n", n)->required()->check(CLI::Range(3, 39));
    cmd_3n2->add_option("k", k)->required()->check(CLI::Range(0, 1000));

    auto* cmd_100 = app.add_subcommand("gen-100", "j-th indecomposable representation of 100");
    cmd_100->add_option("j", j)->required()->check(CLI::Range(0, 10000));

    auto* cmd_catalog = app.add_subcommand("catalog", "classification table");
    cmd_catalog->add_option("--max-m", max_m, "largest m")->required();
    cmd_catalog->add_option("--max-len", max_len)->check(CLI::Range(1, 64));
    cmd_catalog->add_option("--oracle-degree", oracle_degree)->check(CLI::Range(0, 24));
    cmd_catalog->add_option("--format", format)->check(CLI::IsMember({"md", "csv", "json"}));
    cmd_catalog->add_option("--cache", cache_path,
                            "JSON cache file (relative paths resolve under $TPQ_CACHE_DIR)");
    cmd_catalog->add_option("--threads", threads)->check(CLI::Range(1, 256));

    auto* cmd_scan = app.add_subcommand("scan", "feasible integers with no representation");
    cmd_scan->add_option("--max-m", max_m)->required();
    cmd_scan->add_option("--threads", threads)->check(CLI::Range(1, 256));

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force hits as JSON lines");
    cmd_oracle->add_option("m", m)->required();
    cmd_oracle->add_option("--max-degree", max_degree)->required()->check(CLI::Range(0, 24));

    auto* cmd_cross = app.add_subcommand("cross-check", "oracle vs transducer comparison");
    cmd_cross->add_option("m", m)->required();
    cmd_cross->add_option("--max-degree", max_degree)->required()->check(CLI::Range(0, 24));
    cmd_cross->add_option("--max-len", max_len)->required()->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    OwnedString text, error;

    if (cmd_decide->parsed()) {
        int representable = 0;
        tpq_status st = tpq_decide(m.c_str(), &representable, &text.ptr, &error.ptr);
        if (st != TPQ_OK) return report(st, error);
        std::cout << text.str() << "\n";
        return representable ? 0 : 1;
    }
    if (cmd_enum->parsed()) {
        tpq_status st =
            tpq_enumerate(m.c_str(), max_len, decomposable ? 1 : 0, &text.ptr, &error.ptr);
        return print_or_report(st, text, error);
    }
    if (cmd_classify->parsed()) {
        tpq_status st =
            tpq_classify(m.c_str(), p_str.c_str(), q_str.c_str(), &text.ptr, &error.ptr);
        if (st == TPQ_OK) {
            std::cout << text.str() << "\n";
            return 0;
        }
        return report(st, error);
    }
    if (cmd_digraph->parsed()) {
        tpq_digraph* g = nullptr;
        tpq_status st = tpq_digraph_build(m.c_str(), &g, &error.ptr);
        if (st != TPQ_OK) return report(st, error);
        st = tpq_digraph_dot(g, full ? 0 : 1, &text.ptr, &error.ptr);
        tpq_digraph_free(g);
        if (st != TPQ_OK) return report(st, error);
        std::ofstream out(out_path, std::ios::binary);  // LF endings as produced
        out << text.str();
        out.close();
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitIo;
        }
        return 0;
    }
    if (cmd_families->parsed()) {
        tpq_status st = tpq_families(m.c_str(), &text.ptr, &error.ptr);
        return print_or_report(st, text, error);
    }
    if (cmd_3n2->parsed()) {
        tpq_status st = tpq_gen_3n2(n, k, &text.ptr, &error.ptr);
        if (st == TPQ_OK) std::cout << text.str() << "\n";
        return st == TPQ_OK ? 0 : report(st, error);
    }
    if (cmd_100->parsed()) {
        tpq_status st = tpq_gen_100(j, &text.ptr, &error.ptr);
        if (st == TPQ_OK) std::cout << text.str() << "\n";
        return st == TPQ_OK ? 0 : report(st, error);
    }
    if (cmd_catalog->parsed()) {
        tpq_catalog* c = nullptr;
        std::string cache = resolve_cache_path(cache_path);
        tpq_status st = tpq_catalog_build(max_m.c_str(), max_len, oracle_degree,
                                          cache.empty() ? nullptr : cache.c_str(), threads, &c,
                                          &error.ptr);
        if (st != TPQ_OK) return report(st, error);
        st = tpq_catalog_render(c, format.c_str(), &text.ptr, &error.ptr);
        tpq_catalog_free(c);
        return print_or_report(st, text, error);
    }
    if (cmd_scan->parsed()) {
        tpq_status st = tpq_scan_exceptions(max_m.c_str(), threads, &text.ptr, &error.ptr);
        return print_or_report(st, text, error);
    }
    if (cmd_oracle->parsed()) {
        tpq_status st = tpq_oracle(m.c_str(), max_degree, &text.ptr, &error.ptr);
        return print_or_report(st, text, error);
    }
    if (cmd_cross->parsed()) {
        tpq_status st = tpq_cross_check(m.c_str(), max_degree, max_len, &text.ptr, &error.ptr);
        if (st == TPQ_OK) {
            std::cout << text.str() << "\n";
            return 0;
        }
        return report(st, error);
    }
    return kExitUsage;
}
