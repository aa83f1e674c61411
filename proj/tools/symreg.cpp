// Command-line front end: classification and construction for symmetric and
// alternating degree sequences, the (n,d,a) triple cascade with its exact
// oracle, S^(2,2) sequences, Hilbert quotients, and the persistent triple
// cache.  Every command emits either a human-readable block or, with --json,
// one stable JSON object (scan: one per line).
//
// Exit codes: 0 decided, 1 input/integrity error, 2 undecided.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symreg/classify.hpp"
#include "symreg/groebner.hpp"
#include "symreg/mpoly.hpp"
#include "symreg/triples.hpp"
#include "symreg/upoly.hpp"

namespace {

using nlohmann::json;
using namespace symreg;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw CLI::ValidationError("malformed integer list: " + text);
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("empty integer list");
    return out;
}

// "3" or "2..6" -> inclusive range.
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw CLI::ValidationError("empty range: " + text);
    return {lo, hi};
}

const char* status_name(classify::Status s) {
    switch (s) {
        case classify::Status::Regular: return "Regular";
        case classify::Status::NotRegular: return "NotRegular";
        default: return "Unknown";
    }
}

json witness_json(const triples::TripleVerdict& v) {
    if (v.witness_point)
        return json{{"d", v.witness_point->d}, {"exponents", v.witness_point->exponents}};
    return json(v.witness_expr);
}

void emit(const json& record, bool as_json) {
    if (as_json) {
        std::cout << record.dump() << "\n";
        return;
    }
    for (const auto& [key, value] : record.items()) {
        std::cout << key << ": ";
        if (value.is_string())
            std::cout << value.get<std::string>();
        else
            std::cout << value.dump();
        std::cout << "\n";
    }
}

std::string cache_path_or_env(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    const char* env = std::getenv("SYMREG_CACHE");
    return env ? env : "";
}

// --- degree-sequence commands ----------------------------------------------

int run_degseq_classify(const std::string& degrees_csv, int n, bool as_json) {
    auto degrees = parse_csv_ints(degrees_csv);
    if (n > 0 && n != static_cast<int>(degrees.size()))
        throw CLI::ValidationError("-n disagrees with the degree list length");
    auto t0 = Clock::now();
    classify::DegSeq ds{static_cast<int>(degrees.size()), degrees};
    auto v = classify::classify_symmetric(ds);
    json rec{{"command", "degseq-classify"},
             {"n", ds.n},
             {"degrees", degrees},
             {"degrees_sorted", [&] {
                  auto s = degrees;
                  std::sort(s.begin(), s.end());
                  return s;
              }()},
             {"status", status_name(v.status)},
             {"reason", v.reason},
             {"millis", ms_since(t0)}};
    emit(rec, as_json);
    return v.status == classify::Status::Unknown ? 2 : 0;
}

int run_degseq_construct(const std::string& degrees_csv, int n, bool as_json) {
    auto degrees = parse_csv_ints(degrees_csv);
    if (n > 0 && n != static_cast<int>(degrees.size()))
        throw CLI::ValidationError("-n disagrees with the degree list length");
    auto t0 = Clock::now();
    classify::DegSeq ds{static_cast<int>(degrees.size()), degrees};
    auto c = classify::construct_symmetric(ds);
    json gens = json::array();
    for (const auto& g : c.generators) gens.push_back(mpoly::format_mpoly(g, 'e'));
    json rec{{"command", "degseq-construct"},
             {"n", ds.n},
             {"degrees", degrees},
             {"generators", gens},
             {"provenance", c.provenance},
             {"millis", ms_since(t0)}};
    emit(rec, as_json);
    return 0;
}

int run_degseq_verify(const std::vector<std::string>& polys, const std::string& weights_csv,
                      long max_steps, long max_millis, bool as_json) {
    auto weights = parse_csv_ints(weights_csv);
    const int nvars = static_cast<int>(weights.size());
    const char prefix = [&] {
        for (int w : weights)
            if (w != 1) return 'e';
        return 'x';
    }();
    std::vector<mpoly::MPoly> seq;
    for (const auto& text : polys) {
        auto p = mpoly::parse_mpoly(text, nvars, prefix);
        p.weights = weights;
        seq.push_back(std::move(p));
    }
    auto t0 = Clock::now();
    groebner::Budget budget{max_steps, max_millis};
    groebner::Cert cert = static_cast<int>(seq.size()) == nvars
                              ? groebner::verify_regular_maximal(seq, weights, budget)
                              : groebner::verify_regular_partial(seq, weights, budget);
    const char* result = cert == groebner::Cert::Yes  ? "yes"
                         : cert == groebner::Cert::No ? "no"
                                                      : "budget";
    json rec{{"command", "degseq-verify"},
             {"polynomials", polys},
             {"weights", weights},
             {"mode", static_cast<int>(seq.size()) == nvars ? "maximal" : "partial"},
             {"result", result},
             {"millis", ms_since(t0)}};
    emit(rec, as_json);
    return cert == groebner::Cert::Budget ? 2 : 0;
}

// --- triple commands -------------------------------------------------------

json triple_record(const char* command, const triples::Triple& t,
                   const triples::TripleVerdict& v, double millis) {
    json rec{{"command", command},
             {"n", t.n},
             {"d", t.d},
             {"a", t.a},
             {"status", v.status == triples::TStatus::Bad ? "bad" : "good"},
             {"reason", v.reason},
             {"millis", millis}};
    if (v.witness_point || !v.witness_expr.empty()) rec["witness"] = witness_json(v);
    return rec;
}

int run_triple_classify(int n, int d, int a, bool no_oracle, unsigned long long max_points,
                        const std::string& cache_flag, bool as_json) {
    const std::string path = cache_path_or_env(cache_flag);
    triples::TripleCache cache;
    if (!path.empty()) cache = triples::TripleCache::load(path);
    triples::Triple t{n, d, a};
    auto t0 = Clock::now();
    try {
        auto v = triples::classify_triple(t, !no_oracle, path.empty() ? nullptr : &cache,
                                          max_points);
        if (!path.empty()) cache.save(path);
        emit(triple_record("triple-classify", t, v, ms_since(t0)), as_json);
        return 0;
    } catch (const triples::UndecidedError& e) {
        json rec{{"command", "triple-classify"}, {"n", n},      {"d", d},
                 {"a", a},                      {"status", "undecided"},
                 {"reason", "undecided"},       {"error", e.what()},
                 {"millis", ms_since(t0)}};
        emit(rec, as_json);
        return 2;
    }
}

int run_triple_oracle(int n, int d, int a, unsigned long long max_points, bool as_json) {
    triples::Triple t{n, d, a};
    auto t0 = Clock::now();
    auto r = triples::is_bad_oracle(t, max_points);
    json rec{{"command", "triple-oracle"},
             {"n", n},
             {"d", d},
             {"a", a},
             {"decided", r.decided},
             {"points_visited", r.points_visited},
             {"millis", ms_since(t0)}};
    if (r.decided) {
        rec["status"] = r.bad ? "bad" : "good";
        if (r.witness) rec["witness"] = json{{"d", r.witness->d}, {"exponents", r.witness->exponents}};
    } else {
        rec["status"] = "undecided";
    }
    emit(rec, as_json);
    return r.decided ? 0 : 2;
}

int run_triple_scan(const std::string& n_range, const std::string& d_range,
                    const std::string& a_range, bool no_oracle, unsigned long long max_points,
                    const std::string& cache_flag, bool as_json) {
    auto [n_lo, n_hi] = parse_range(n_range);
    auto [d_lo, d_hi] = parse_range(d_range);
    auto [a_lo, a_hi] = parse_range(a_range);
    if (n_lo < 1 || d_lo < 1 || a_lo < 1)
        throw CLI::ValidationError("scan ranges must start at 1 or above");

    const std::string path = cache_path_or_env(cache_flag);
    triples::TripleCache cache;
    if (!path.empty()) cache = triples::TripleCache::load(path);

    long seq = 0;
    int undecided = 0;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int d = d_lo; d <= d_hi; ++d)
            for (int a = a_lo; a <= a_hi; ++a) {
                triples::Triple t{n, d, a};
                auto t0 = Clock::now();
                json rec;
                try {
                    auto v = triples::classify_triple(t, !no_oracle, &cache, max_points);
                    rec = triple_record("triple-scan", t, v, ms_since(t0));
                } catch (const triples::UndecidedError&) {
                    ++undecided;
                    rec = json{{"command", "triple-scan"}, {"n", n},
                               {"d", d},                   {"a", a},
                               {"status", "undecided"},    {"reason", "undecided"},
                               {"millis", ms_since(t0)}};
                }
                rec["seq"] = seq++;
                emit(rec, as_json);
                if (!as_json) std::cout << "\n";
            }
    triples::propagate(cache, {n_hi, d_hi, a_hi});
    if (!path.empty()) cache.save(path);
    return undecided > 0 ? 2 : 0;
}

// --- S^(2,2), alternating, Hilbert -----------------------------------------

int run_s22_classify(int a, int c, int d, bool as_json) {
    auto t0 = Clock::now();
    auto v = classify::classify_s22(a, c, d);
    json rec{{"command", "s22-classify"},
             {"a", a},
             {"c", c},
             {"d", d},
             {"status", status_name(v.status)},
             {"reason", v.reason},
             {"millis", ms_since(t0)}};
    emit(rec, as_json);
    return v.status == classify::Status::Unknown ? 2 : 0;
}

int run_s22_construct(int a, int c, int d, bool as_json) {
    auto t0 = Clock::now();
    auto cs = classify::construct_s22(a, c, d);
    json rec{{"command", "s22-construct"},
             {"a", a},
             {"c", c},
             {"d", d},
             {"h", mpoly::format_mpoly(cs.generators[0], 'e')},
             {"hp", mpoly::format_mpoly(cs.generators[1], 'e')},
             {"f1", mpoly::format_mpoly(cs.generators[2], 'e')},
             {"f2", mpoly::format_mpoly(cs.generators[3], 'e')},
             {"g1", mpoly::format_mpoly(cs.specht[0], 'x')},
             {"g2", mpoly::format_mpoly(cs.specht[1], 'x')},
             {"provenance", cs.provenance},
             {"millis", ms_since(t0)}};
    emit(rec, as_json);
    return 0;
}

int run_alt_classify(const std::string& degrees_csv, int n, int D, bool as_json) {
    auto degrees = parse_csv_ints(degrees_csv);
    if (n > 0 && n != static_cast<int>(degrees.size()) + 1)
        throw CLI::ValidationError("-n must be one more than the symmetric degree count");
    const int nn = static_cast<int>(degrees.size()) + 1;
    auto t0 = Clock::now();
    auto v = classify::classify_alternating({nn, degrees}, D);
    json rec{{"command", "alt-classify"},
             {"n", nn},
             {"degrees", degrees},
             {"D", D},
             {"status", status_name(v.status)},
             {"reason", v.reason},
             {"millis", ms_since(t0)}};
    emit(rec, as_json);
    return v.status == classify::Status::Unknown ? 2 : 0;
}

int run_hilbert(const std::string& degrees_csv, int n, bool as_json) {
    auto degrees = parse_csv_ints(degrees_csv);
    if (n > 0 && n != static_cast<int>(degrees.size()))
        throw CLI::ValidationError("-n disagrees with the degree list length");
    auto t0 = Clock::now();
    auto h = upoly::hilbert_quotient(degrees);
    json rec{{"command", "hilbert"},
             {"n", static_cast<int>(degrees.size())},
             {"degrees", degrees},
             {"integral", h.integral},
             {"millis", 0.0}};
    if (h.integral) {
        rec["polynomial"] = upoly::to_string(h.quotient);
        rec["nonnegative"] = h.nonnegative;
        rec["coeff_sum"] = h.coeff_sum.get_str();
    }
    rec["millis"] = ms_since(t0);
    emit(rec, as_json);
    return 0;
}

// --- cache commands --------------------------------------------------------

int run_cache_export(const std::string& cache_flag, const std::string& out_path) {
    const std::string path = cache_path_or_env(cache_flag);
    if (path.empty()) throw CLI::ValidationError("no cache path: use --cache or SYMREG_CACHE");
    auto cache = triples::TripleCache::load(path);
    std::ostringstream lines;
    for (const auto& [key, v] : cache.entries())
        lines << triples::TripleCache::to_json_line({key[0], key[1], key[2]}, v) << "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << lines.str();
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << lines.str();
    }
    return 0;
}

int run_cache_import(const std::string& cache_flag, const std::string& in_path) {
    const std::string path = cache_path_or_env(cache_flag);
    if (path.empty()) throw CLI::ValidationError("no cache path: use --cache or SYMREG_CACHE");
    auto cache = triples::TripleCache::load(path);
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot read " + in_path);
    std::string line;
    long merged = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto [t, v] = triples::TripleCache::from_json_line(line);
        if (cache.insert(t, v)) ++merged;  // conflicting status throws
    }
    cache.save(path);
    std::cerr << "imported " << merged << " new entries into " << path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regular sequences of symmetric and related polynomials"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON object per record");

    // shared option storage
    std::string degrees_csv, weights_csv = "1", cache_flag, out_path, in_path;
    std::vector<std::string> polys;
    std::string n_range = "1", d_range = "1", a_range = "1";
    int n = 0, d = 0, a = 0, c = 0, D = 0;
    bool no_oracle = false;
    unsigned long long max_points = 2000000;
    long max_steps = 50000, max_millis = 0;

    auto* dc = app.add_subcommand("degseq-classify", "classify a symmetric degree sequence");
    dc->add_option("-n", n, "number of variables (validated against the list)");
    dc->add_option("degrees", degrees_csv, "comma-separated degree list")->required();

    auto* dk = app.add_subcommand("degseq-construct", "construct a regular sequence of the given type");
    dk->add_option("-n", n, "number of variables");
    dk->add_option("degrees", degrees_csv, "comma-separated degree list")->required();

    auto* dv = app.add_subcommand("degseq-verify", "verify a user-supplied sequence via Groebner bases");
    dv->add_option("--weights", weights_csv, "variable weights, e.g. 1,2,3,4 for e-coordinates")
        ->required();
    dv->add_option("--max-steps", max_steps, "reduction-step budget (default 50000)");
    dv->add_option("--max-millis", max_millis, "wall-clock budget in ms (0 = off)");
    dv->add_option("polynomials", polys, "polynomials in text form")->required();

    auto* tc = app.add_subcommand("triple-classify", "classify one (n,d,a) triple");
    tc->add_option("n", n, "number of roots")->required();
    tc->add_option("d", d, "root-of-unity order")->required();
    tc->add_option("a", a, "degree")->required();
    tc->add_flag("--no-oracle", no_oracle, "criteria and cache only");
    tc->add_option("--max-points", max_points, "oracle point budget (default 2000000)");
    tc->add_option("--cache", cache_flag, "cache file (default $SYMREG_CACHE)");

    auto* to = app.add_subcommand("triple-oracle", "run the exhaustive oracle on one triple");
    to->add_option("n", n, "number of roots")->required();
    to->add_option("d", d, "root-of-unity order")->required();
    to->add_option("a", a, "degree")->required();
    to->add_option("--max-points", max_points, "point budget (default 2000000)");

    auto* ts = app.add_subcommand("triple-scan", "classify a whole (n,d,a) grid");
    ts->add_option("--n", n_range, "n range, e.g. 2..4 or 7")->required();
    ts->add_option("--d", d_range, "d range")->required();
    ts->add_option("--a", a_range, "a range")->required();
    ts->add_flag("--no-oracle", no_oracle, "criteria and cache only");
    ts->add_option("--max-points", max_points, "oracle point budget per triple");
    ts->add_option("--cache", cache_flag, "cache file (default $SYMREG_CACHE)");

    auto* sc = app.add_subcommand("s22-classify", "classify an S^(2,2)+trivial-pair datum (a,c,d)");
    sc->add_option("a", a, "degree of the paired generators")->required();
    sc->add_option("c", c, "degree of the first symmetric generator")->required();
    sc->add_option("d", d, "degree of the second symmetric generator")->required();

    auto* sk = app.add_subcommand("s22-construct", "construct a regular S^(2,2) sequence");
    sk->add_option("a", a, "degree of the paired generators")->required();
    sk->add_option("c", c, "degree of the first symmetric generator")->required();
    sk->add_option("d", d, "degree of the second symmetric generator")->required();

    auto* ac = app.add_subcommand("alt-classify", "necessary conditions for an alternating generator");
    ac->add_option("-n", n, "number of variables");
    ac->add_option("-D,--total", D, "degree of the alternating generator")->required();
    ac->add_option("degrees", degrees_csv, "comma-separated symmetric degrees (n-1 of them)")
        ->required();

    auto* hb = app.add_subcommand("hilbert", "Hilbert-series quotient of a degree sequence");
    hb->add_option("-n", n, "number of variables");
    hb->add_option("degrees", degrees_csv, "comma-separated degree list")->required();

    auto* ce = app.add_subcommand("cache-export", "dump the cache as canonical JSON lines");
    ce->add_option("--cache", cache_flag, "cache file (default $SYMREG_CACHE)");
    ce->add_option("output", out_path, "output file (default stdout)");

    auto* ci = app.add_subcommand("cache-import", "merge JSON lines into the cache");
    ci->add_option("--cache", cache_flag, "cache file (default $SYMREG_CACHE)");
    ci->add_option("input", in_path, "input file")->required();

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();
    CLI11_PARSE(app, argc, argv);

    try {
        if (dc->parsed()) return run_degseq_classify(degrees_csv, n, as_json);
        if (dk->parsed()) return run_degseq_construct(degrees_csv, n, as_json);
        if (dv->parsed()) return run_degseq_verify(polys, weights_csv, max_steps, max_millis, as_json);
        if (tc->parsed()) return run_triple_classify(n, d, a, no_oracle, max_points, cache_flag, as_json);
        if (to->parsed()) return run_triple_oracle(n, d, a, max_points, as_json);
        if (ts->parsed())
            return run_triple_scan(n_range, d_range, a_range, no_oracle, max_points, cache_flag,
                                   as_json);
        if (sc->parsed()) return run_s22_classify(a, c, d, as_json);
        if (sk->parsed()) return run_s22_construct(a, c, d, as_json);
        if (ac->parsed()) return run_alt_classify(degrees_csv, n, D, as_json);
        if (hb->parsed()) return run_hilbert(degrees_csv, n, as_json);
        if (ce->parsed()) return run_cache_export(cache_flag, out_path);
        if (ci->parsed()) return run_cache_import(cache_flag, in_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
