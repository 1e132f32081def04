// Command-line front end: evaluate single quantities, run the identity
// verification suite, benchmark the zeta evaluation strategies, and manage
// the on-disk value cache.

#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <mpfr.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "mzv/identities.hpp"
#include "mzv/multi_index.hpp"
#include "mzv/polylog.hpp"
#include "mzv/real.hpp"
#include "mzv/report_io.hpp"
#include "mzv/weighted_sums.hpp"
#include "mzv/zeta.hpp"

namespace {

using namespace mzv;

std::string resolve_cache_path(const std::string& flag_value) {
    if (!flag_value.empty())
        return flag_value;
    if (const char* env = std::getenv("MZV_CACHE"); env && *env)
        return env;
    return "mzv_cache.txt";
}

std::size_t load_if_present(ZetaCache& cache, const std::string& path) {
    if (!std::filesystem::exists(path))
        return 0;
    return cache.load(path);
}

int parse_int_strict(const std::string& s) {
    int v{};
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw std::invalid_argument("not an integer: " + s);
    return v;
}

// Collects trailing key=value tokens, validating against `allowed`.
std::map<std::string, std::string> parse_kv(const std::vector<std::string>& toks,
                                            std::size_t from,
                                            const std::string& allowed) {
    std::map<std::string, std::string> kv;
    for (std::size_t i = from; i < toks.size(); ++i) {
        const auto eq = toks[i].find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= toks[i].size())
            throw std::invalid_argument("expected key=value, got: " + toks[i]);
        const std::string key = toks[i].substr(0, eq);
        if (key.size() != 1 || allowed.find(key[0]) == std::string::npos)
            throw std::invalid_argument("unexpected parameter: " + key);
        if (!kv.emplace(key, toks[i].substr(eq + 1)).second)
            throw std::invalid_argument("duplicate parameter: " + key);
    }
    return kv;
}

const std::string& kv_get(const std::map<std::string, std::string>& kv,
                          const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end())
        throw std::invalid_argument("missing parameter " + key);
    return it->second;
}

// %g-style rendering at full working precision; plain decimal for small
// exponents, scientific otherwise.
std::string pretty(const Real& v) {
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*RNg", v.digits(), v.raw());
    std::string s = out ? out : "";
    mpfr_free_str(out);
    return s;
}

int cmd_eval(const std::vector<std::string>& raw, int precision,
             const std::string& cache_flag) {
    if (precision < 30 || precision > 1000)
        throw std::invalid_argument("precision must be in [30, 1000]");
    // accept the expression either as one quoted string or as bare tokens
    std::vector<std::string> toks;
    for (const auto& piece : raw) {
        std::istringstream ss(piece);
        std::string t;
        while (ss >> t)
            toks.push_back(t);
    }
    if (toks.empty())
        throw std::invalid_argument("empty expression");
    const int P = precision;
    ZetaCache cache;
    load_if_present(cache, resolve_cache_path(cache_flag));

    Real v = Real::zero(P);
    const std::string& kind = toks[0];
    if (kind == "zeta") {
        if (toks.size() != 2)
            throw std::invalid_argument("usage: zeta <index>");
        v = zeta(MultiIndex::parse(toks[1]), P, cache);
    } else if (kind == "li") {
        if (toks.size() != 4 || toks[2] != "@")
            throw std::invalid_argument("usage: li <index> @ <z>");
        v = li_index(MultiIndex::parse(toks[1]), Real::from_str(toks[3], P), P);
    } else if (kind == "S") {
        if (toks.size() != 5)
            throw std::invalid_argument("usage: S <l> <n> x=<x> y=<y>");
        const int l = parse_int_strict(toks[1]);
        const int n = parse_int_strict(toks[2]);
        const auto kv = parse_kv(toks, 3, "xy");
        v = s_weighted(l, n, Real::from_str(kv_get(kv, "x"), P),
                       Real::from_str(kv_get(kv, "y"), P), P, cache);
    } else if (kind == "Z") {
        if (toks.size() != 4)
            throw std::invalid_argument("usage: Z <l> <n> <r>");
        v = z_coeff(parse_int_strict(toks[1]), parse_int_strict(toks[2]),
                    parse_int_strict(toks[3]), P, cache);
    } else if (kind == "Sdq") {
        if (toks.size() != 7)
            throw std::invalid_argument(
                "usage: Sdq <l> <n> p=<p> q=<q> x=<x> y=<y>");
        const int l = parse_int_strict(toks[1]);
        const int n = parse_int_strict(toks[2]);
        const auto kv = parse_kv(toks, 3, "pqxy");
        v = s_derivative(l, n, parse_int_strict(kv_get(kv, "p")),
                         parse_int_strict(kv_get(kv, "q")),
                         Real::from_str(kv_get(kv, "x"), P),
                         Real::from_str(kv_get(kv, "y"), P), P, cache);
    } else {
        throw std::invalid_argument("unknown expression kind: " + kind);
    }
    std::cout << pretty(v) << "\n";
    return 0;
}

int cmd_verify(RunConfig cfg, const std::string& ids_csv,
               const std::string& fmt_name, const std::string& cache_flag) {
    const auto fmt = format_from_name(fmt_name);
    if (!fmt)
        throw std::invalid_argument("unknown format: " + fmt_name);
    std::vector<IdentityId> ids;
    if (!ids_csv.empty() && ids_csv != "all") {
        std::size_t pos = 0;
        while (pos <= ids_csv.size()) {
            const auto comma = ids_csv.find(',', pos);
            const std::string name =
                ids_csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                               : comma - pos);
            const auto id = id_from_name(name);
            if (!id)
                throw std::invalid_argument("unknown identity: " + name);
            ids.push_back(*id);
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
    }
    const std::string path = resolve_cache_path(cache_flag);
    ZetaCache cache;
    load_if_present(cache, path);
    const auto reports = run_suite(ids, cfg, cache);
    write_reports(std::cout, reports, *fmt);
    cache.save(path);
    for (const auto& r : reports)
        if (!r.pass)
            return 1;
    return 0;
}

int cmd_bench(int precision, int weight_cap, int threads,
              const std::string& cache_flag) {
    RunConfig guard;
    guard.precision = precision;
    guard.weight_cap = weight_cap;
    guard.threads = threads;
    validate_config(guard);
    const int P = precision;
    const long naive_terms = 100000;
    const std::string path = resolve_cache_path(cache_flag);
    ZetaCache cache;
    load_if_present(cache, path);

    const auto idxs = admissible_indices(weight_cap);
    struct Row {
        std::string idx;
        double conv_ms, naive_ms;
        std::string bound, diff;
    };
    std::vector<Row> rows(idxs.size());
#ifdef _OPENMP
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(idxs.size());
         ++i) {
        const auto& idx = idxs[static_cast<std::size_t>(i)];
        const auto t0 = std::chrono::steady_clock::now();
        const Real v = zeta(idx, P, cache);
        const auto t1 = std::chrono::steady_clock::now();
        const NaiveResult nr = zeta_naive(idx, naive_terms, P);
        const auto t2 = std::chrono::steady_clock::now();
        rows[static_cast<std::size_t>(i)] = Row{
            idx.str(),
            std::chrono::duration<double, std::milli>(t1 - t0).count(),
            std::chrono::duration<double, std::milli>(t2 - t1).count(),
            nr.error_bound.to_string(3), (v - nr.value).abs().to_string(3)};
    }
    std::printf("%-14s %12s %12s %12s %12s\n", "index", "conv ms", "naive ms",
                "naive bound", "|diff|");
    double conv_total = 0, naive_total = 0;
    for (const auto& r : rows) {
        std::printf("%-14s %12.3f %12.3f %12s %12s\n", r.idx.c_str(), r.conv_ms,
                    r.naive_ms, r.bound.c_str(), r.diff.c_str());
        conv_total += r.conv_ms;
        naive_total += r.naive_ms;
    }
    std::printf("totals: convolution %.3f ms, naive(M=%ld) %.3f ms over %zu indices\n",
                conv_total, naive_terms, naive_total, idxs.size());

    // second pass: everything is now cached, so this measures pure lookups
    const auto w0 = std::chrono::steady_clock::now();
    for (const auto& idx : idxs)
        (void)zeta(idx, P, cache);
    const auto w1 = std::chrono::steady_clock::now();
    const double warm_ms =
        std::chrono::duration<double, std::milli>(w1 - w0).count();
    std::printf("warm convolution pass: %.3f ms (%.1fx vs cold)\n", warm_ms,
                warm_ms > 0 ? conv_total / warm_ms : 0.0);
    cache.save(path);
    return 0;
}

int cmd_cache(const std::string& action, const std::string& file_arg,
              const std::string& cache_flag) {
    const std::string path = resolve_cache_path(cache_flag);
    ZetaCache cache;
    if (action == "stats") {
        load_if_present(cache, path);
        std::printf("cache %s: %zu entries\n", path.c_str(), cache.size());
        const auto h = cache.hits(), m = cache.misses();
        if (h + m == 0)
            std::printf("hit ratio: n/a (no lookups this session)\n");
        else
            std::printf("hit ratio: %.2f (%llu hits / %llu misses)\n",
                        static_cast<double>(h) / static_cast<double>(h + m),
                        static_cast<unsigned long long>(h),
                        static_cast<unsigned long long>(m));
        return 0;
    }
    if (action == "clear") {
        std::error_code ec;
        std::filesystem::remove(path, ec);
        if (ec)
            throw std::runtime_error("cannot remove " + path + ": " + ec.message());
        std::printf("cleared %s\n", path.c_str());
        return 0;
    }
    if (action == "export") {
        if (file_arg.empty())
            throw std::invalid_argument("usage: cache export <path>");
        load_if_present(cache, path);
        cache.save(file_arg);
        std::printf("exported %zu entries to %s\n", cache.size(),
                    file_arg.c_str());
        return 0;
    }
    if (action == "import") {
        if (file_arg.empty())
            throw std::invalid_argument("usage: cache import <path>");
        load_if_present(cache, path);
        std::size_t lines = 0;
        {
            std::ifstream in(file_arg);
            if (!in)
                throw std::runtime_error("cannot open " + file_arg);
            std::string line;
            while (std::getline(in, line))
                if (!line.empty())
                    ++lines;
        }
        const std::size_t added = cache.load(file_arg);
        if (added < lines)
            std::fprintf(stderr,
                         "warning: %zu line(s) skipped (malformed or already "
                         "present)\n",
                         lines - added);
        cache.save(path);
        std::printf("imported %zu entries into %s\n", added, path.c_str());
        return 0;
    }
    throw std::invalid_argument("unknown cache action: " + action);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple zeta value toolkit"};
    app.require_subcommand(1);

    auto* ev = app.add_subcommand("eval", "evaluate a single quantity");
    std::vector<std::string> expr;
    int ev_precision = 40;
    std::string ev_cache;
    ev->add_option("expr", expr, "expression, e.g. zeta 2,1 | li 1,1 @ 0.5 | "
                                 "S 7 3 x=1 y=2 | Z 4 2 1 | "
                                 "Sdq 7 3 p=0 q=1 x=2 y=1")
        ->required()
        ->expected(-1);
    ev->add_option("--precision", ev_precision, "decimal digits (default 40)");
    ev->add_option("--cache", ev_cache, "value cache path");

    auto* vf = app.add_subcommand("verify", "run identity verification suites");
    RunConfig cfg;
    std::string ids_csv, vf_format = "table", vf_cache;
    vf->add_option("--ids", ids_csv, "comma-separated identity names, or all");
    vf->add_option("--precision", cfg.precision, "decimal digits (default 40)");
    vf->add_option("--weight-cap", cfg.weight_cap, "max weight L (default 9)");
    vf->add_option("--samples", cfg.samples, "tuples per sampled identity");
    vf->add_option("--seed", cfg.seed, "sampling seed");
    vf->add_option("--zmax", cfg.z_max, "|z| cap for polylog samples");
    vf->add_option("--threads", cfg.threads, "worker threads (0 = auto)");
    vf->add_option("--format", vf_format, "json | csv | table");
    vf->add_option("--cache", vf_cache, "value cache path");

    auto* bn = app.add_subcommand("bench",
                                  "compare zeta strategies per admissible index");
    int bn_precision = 40, bn_weight = 9, bn_threads = 0;
    std::string bn_cache;
    bn->add_option("--precision", bn_precision, "decimal digits (default 40)");
    bn->add_option("--weight-cap", bn_weight, "max weight L (default 9)");
    bn->add_option("--threads", bn_threads, "worker threads (0 = auto)");
    bn->add_option("--cache", bn_cache, "value cache path");

    auto* ca = app.add_subcommand("cache", "inspect or edit the value cache");
    std::string ca_action, ca_file, ca_cache;
    ca->add_option("action", ca_action, "stats | clear | export | import")
        ->required();
    ca->add_option("path", ca_file, "file for export/import");
    ca->add_option("--cache", ca_cache, "value cache path");

    try {
        app.parse(argc, argv);
        if (*ev)
            return cmd_eval(expr, ev_precision, ev_cache);
        if (*vf)
            return cmd_verify(cfg, ids_csv, vf_format, vf_cache);
        if (*bn)
            return cmd_bench(bn_precision, bn_weight, bn_threads, bn_cache);
        if (*ca)
            return cmd_cache(ca_action, ca_file, ca_cache);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}
