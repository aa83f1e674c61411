#include "symreg/triples.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "symreg/numth.hpp"

namespace symreg::triples {

namespace {

using cyclo::RootPoint;

void validate(const Triple& t) {
    if (t.n < 1 || t.d < 1 || t.a < 1)
        throw std::invalid_argument("triples: n, d, a must be >= 1");
}

std::string triple_str(const Triple& t) {
    std::ostringstream os;
    os << "(" << t.n << "," << t.d << "," << t.a << ")";
    return os.str();
}

std::string pow_expr(const std::string& base, long long k) {
    return k == 1 ? base : base + "^" + std::to_string(k);
}

// The point (w, w^2, ..., w^n) for w a primitive g-th root of unity,
// g = gcd(n, d): every e_j with g not dividing j vanishes there.
RootPoint two_proofs_point(int n, int d) {
    int g = std::gcd(n, d);
    int step = d / g;
    std::vector<int> exps(n);
    for (int i = 1; i <= n; ++i) exps[i - 1] = static_cast<int>((static_cast<long long>(step) * i) % d);
    return cyclo::make_root_point(d, std::move(exps));
}

// A point with P_1 = 0, built from a decomposition of n into prime divisors
// of d: each prime p contributes a full set of p-th roots of unity.
// Requires n in Gamma(d).
RootPoint vanishing_sum_point(int n, int d) {
    std::vector<long long> primes = numth::prime_divisors(d);
    std::vector<int> used(n + 1, -1);
    used[0] = 0;
    for (int m = 1; m <= n; ++m)
        for (long long p : primes)
            if (p <= m && used[m - static_cast<int>(p)] >= 0) {
                used[m] = static_cast<int>(p);
                break;
            }
    if (used[n] <= 0) throw std::logic_error("vanishing_sum_point: n not in Gamma(d)");
    std::vector<int> exps;
    for (int m = n; m > 0; m -= used[m]) {
        int p = used[m];
        for (int j = 0; j < p; ++j) exps.push_back(j * (d / p));
    }
    return cyclo::make_root_point(d, std::move(exps));
}

// --- propagation rules -----------------------------------------------------

std::optional<RootPoint> scale_witness_d(const std::optional<RootPoint>& w, int k) {
    if (!w) return std::nullopt;
    std::vector<int> exps;
    exps.reserve(w->exponents.size());
    for (int b : w->exponents) exps.push_back(b * k);
    return cyclo::make_root_point(w->d * k, std::move(exps));
}

std::optional<RootPoint> repeat_witness_n(const std::optional<RootPoint>& w, int k) {
    if (!w) return std::nullopt;
    std::vector<int> exps;
    exps.reserve(w->exponents.size() * k);
    for (int i = 0; i < k; ++i)
        for (int b : w->exponents) exps.push_back(b);
    return cyclo::make_root_point(w->d, std::move(exps));
}

std::optional<RootPoint> spread_witness_all(const std::optional<RootPoint>& w, int k) {
    if (!w) return std::nullopt;
    std::vector<int> exps;
    exps.reserve(w->exponents.size() * k);
    for (int b : w->exponents)
        for (int s = 0; s < k; ++s) exps.push_back(b + s * w->d);
    return cyclo::make_root_point(w->d * k, std::move(exps));
}

// Does the recorded verdict for t0 imply one for t?  Returns the derived
// verdict if so.
std::optional<TripleVerdict> implied_verdict(const Triple& t0, const TripleVerdict& v0,
                                             const Triple& t) {
    if (v0.status == TStatus::Bad) {
        if (t.n == t0.n && t.a == t0.a && t.d % t0.d == 0)
            return TripleVerdict{TStatus::Bad, "prop-bad-scale-d",
                                 scale_witness_d(v0.witness_point, t.d / t0.d), ""};
        if (t.d == t0.d && t.a == t0.a && t.n % t0.n == 0)
            return TripleVerdict{TStatus::Bad, "prop-bad-scale-n",
                                 repeat_witness_n(v0.witness_point, t.n / t0.n), ""};
        if (t.n % t0.n == 0) {
            int k = t.n / t0.n;
            if (t.d == k * t0.d && t.a == k * t0.a)
                return TripleVerdict{TStatus::Bad, "prop-bad-scale-all",
                                     spread_witness_all(v0.witness_point, k), ""};
        }
    } else {
        if (t.n == t0.n && t.d == t0.d && t.a % t0.a == 0)
            return TripleVerdict{TStatus::Good, "prop-good-scale-a", std::nullopt, ""};
        if (t.n == t0.n && t.d % t0.d == 0) {
            int k = t.d / t0.d;
            if (t.a == k * t0.a)
                return TripleVerdict{TStatus::Good, "prop-good-scale-da", std::nullopt, ""};
        }
    }
    return std::nullopt;
}

std::optional<TripleVerdict> derive_from_cache(const TripleCache& cache, const Triple& t) {
    for (const auto& [key, v0] : cache.entries()) {
        Triple t0{key[0], key[1], key[2]};
        if (t0 == t) continue;
        if (auto derived = implied_verdict(t0, v0, t)) return derived;
    }
    return std::nullopt;
}

}  // namespace

bool enumerate_exponent_multisets(int length, int d,
                                  const std::function<bool(const std::vector<int>&)>& visit) {
    if (length < 0 || d < 1) throw std::invalid_argument("enumerate_exponent_multisets: bad arguments");
    std::vector<int> v(length, 0);
    for (;;) {
        if (!visit(v)) return false;
        int i = length - 1;
        while (i >= 0 && v[i] == d - 1) --i;
        if (i < 0) return true;
        int val = v[i] + 1;
        for (int j = i; j < length; ++j) v[j] = val;
    }
}

bool enumerate_vd(int n, int d, const std::function<bool(const RootPoint&)>& visit) {
    if (n < 1 || d < 1) throw std::invalid_argument("enumerate_vd: n and d must be >= 1");
    return enumerate_exponent_multisets(n - 1, d, [&](const std::vector<int>& tail) {
        RootPoint Q;
        Q.d = d;
        Q.n = n;
        Q.exponents.reserve(n);
        Q.exponents.push_back(0);  // the forced coordinate z_n = 1
        Q.exponents.insert(Q.exponents.end(), tail.begin(), tail.end());
        return visit(Q);
    });
}

unsigned long long vd_count(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("vd_count: n and d must be >= 1");
    unsigned long long result = 1;
    for (int i = 1; i <= n - 1; ++i) {
        result = result * static_cast<unsigned long long>(d - 1 + i);
        result /= static_cast<unsigned long long>(i);
    }
    return result;
}

std::vector<std::vector<int>> partitions(int a, int max_part) {
    if (a < 0) throw std::invalid_argument("partitions: a must be >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, a, max_part);
    return out;
}

OracleResult is_bad_oracle(const Triple& t, unsigned long long max_points) {
    validate(t);
    const int n = t.n, d = t.d, a = t.a;
    const auto reducer = cyclo::shared_reducer(d);
    const int mmax = std::min(n, a);
    const auto parts_list = partitions(a, mmax);

    // Galois conjugation sends P_m(Q) to P_{sm}(Q) for units s mod d, and the
    // residues with a fixed gcd against d form one orbit, so P_m(Q) vanishes
    // iff P_{gcd(m,d)}(Q) does.  One zero test per divisor covers all m.
    std::vector<int> gcd_of(static_cast<std::size_t>(mmax) + 1, 0);
    std::vector<int> divisors;  // distinct gcd values occurring for m = 1..mmax
    for (int m = 1; m <= mmax; ++m) {
        gcd_of[static_cast<std::size_t>(m)] = std::gcd(m, d);
        if (gcd_of[static_cast<std::size_t>(m)] == m) divisors.push_back(m);
    }

    OracleResult out;
    out.decided = true;
    std::vector<long long> counts(static_cast<std::size_t>(d));
    std::vector<char> vz(static_cast<std::size_t>(d) + 1, 0);
    auto psum_zero = [&](long long m, const RootPoint& Q) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int b : Q.exponents) ++counts[static_cast<std::size_t>((m * b) % d)];
        return reducer->is_zero(counts);
    };
    enumerate_vd(n, d, [&](const RootPoint& Q) {
        if (max_points != 0 && out.points_visited >= max_points) {
            out.decided = false;
            return false;
        }
        ++out.points_visited;
        // If P_1(Q) != 0 the all-ones partition does not vanish at Q.
        if (!psum_zero(1, Q)) return true;
        for (int g : divisors) vz[static_cast<std::size_t>(g)] = g == 1 || psum_zero(g, Q);
        for (const auto& lambda : parts_list) {
            bool meets = false;
            for (int part : lambda)
                if (vz[static_cast<std::size_t>(gcd_of[static_cast<std::size_t>(part)])]) {
                    meets = true;
                    break;
                }
            if (!meets) return true;  // P_lambda(Q) != 0: Q is not a witness
        }
        out.bad = true;
        out.witness = Q;
        return false;
    });
    if (!out.decided) {
        out.bad = false;
        out.witness.reset();
    }
    return out;
}

TripleVerdict classify_triple(const Triple& t, bool allow_oracle, TripleCache* cache,
                              unsigned long long max_points) {
    validate(t);
    const int n = t.n, d = t.d, a = t.a;
    auto decide = [&](TripleVerdict v) {
        if (cache) cache->insert(t, v);
        return v;
    };

    // 1: gcd(n,d) must divide a.
    const int g = std::gcd(n, d);
    if (a % g != 0) return decide({TStatus::Bad, "bad-gcd", two_proofs_point(n, d), ""});

    // 2: n outside Gamma(d / gcd(a,d)) makes P_a itself a witness.
    const int ga = std::gcd(a, d);
    if (!numth::gamma_contains(d / ga, n))
        return decide({TStatus::Good, "good-gamma", std::nullopt, "P_" + std::to_string(a)});

    // 3: e_n^(a/n) never vanishes on V_d.
    if (a % n == 0)
        return decide(
            {TStatus::Good, "good-en-power", std::nullopt, pow_expr("e" + std::to_string(n), a / n)});

    // 4: products of power sums P_q over divisors q with n outside
    // Gamma(d/q), padded by e_n factors.
    {
        std::vector<long long> gens;
        for (int q = 1; q <= d; ++q)
            if (d % q == 0 && !numth::gamma_contains(d / q, n)) gens.push_back(q);
        gens.push_back(n);
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<int> used(a + 1, -1);
        used[0] = 0;
        for (int m = 1; m <= a; ++m)
            for (long long q : gens)
                if (q <= m && used[m - static_cast<int>(q)] >= 0) {
                    used[m] = static_cast<int>(q);
                    break;
                }
        if (used[a] > 0) {
            std::vector<int> parts;
            for (int m = a; m > 0; m -= used[m]) parts.push_back(used[m]);
            std::sort(parts.begin(), parts.end(), std::greater<>());
            std::string expr;
            for (std::size_t i = 0; i < parts.size();) {
                std::size_t j = i;
                while (j < parts.size() && parts[j] == parts[i]) ++j;
                std::string base =
                    parts[i] == n ? "e" + std::to_string(n) : "P_" + std::to_string(parts[i]);
                if (!expr.empty()) expr += "*";
                expr += pow_expr(base, static_cast<long long>(j - i));
                i = j;
            }
            return decide({TStatus::Good, "good-divisor-semigroup", std::nullopt, expr});
        }
    }

    // 5: n in Gamma(d) yields a point with P_1 = 0; a outside Gamma(d) makes
    // every partition of a contain a part coprime to d.
    if (numth::gamma_contains(d, n) && !numth::gamma_contains(d, a))
        return decide({TStatus::Bad, "bad-coprime", vanishing_sum_point(n, d), ""});

    // 6: prime-power d decides by the gcd rule; step 1 already ruled Bad out.
    const auto fact = numth::factorize(d);
    if (fact.size() == 1) return decide({TStatus::Good, "good-prime-power", std::nullopt, ""});

    // 7: n below the sum of the two smallest primes of d, same rule.
    if (fact.size() >= 2 && n < fact[0].prime + fact[1].prime)
        return decide({TStatus::Good, "good-two-prime", std::nullopt, ""});

    // 8: large a with g | a is good via P_d^s e_n^t.
    if (static_cast<long long>(a) * g >= static_cast<long long>(n - g) * (d - g)) {
        std::string expr;
        for (int s = 0; s <= a / d; ++s)
            if ((a - s * d) % n == 0) {
                int tt = (a - s * d) / n;
                if (s > 0) expr = pow_expr("P_" + std::to_string(d), s);
                if (tt > 0) {
                    if (!expr.empty()) expr += "*";
                    expr += pow_expr("e" + std::to_string(n), tt);
                }
                break;
            }
        return decide({TStatus::Good, "good-large-a", std::nullopt, expr});
    }

    // 9: recorded verdicts, including consequences under the propagation rules.
    if (cache) {
        if (auto hit = cache->lookup(t)) return *hit;
        if (auto derived = derive_from_cache(*cache, t)) {
            cache->insert(t, *derived);
            return *derived;
        }
    }

    // 10: exhaustive scan.
    if (allow_oracle) {
        OracleResult res = is_bad_oracle(t, max_points);
        if (!res.decided)
            throw UndecidedError("classify_triple: oracle point budget exhausted for " +
                                 triple_str(t));
        if (res.bad) return decide({TStatus::Bad, "oracle-bad", std::move(res.witness), ""});
        return decide({TStatus::Good, "oracle-good", std::nullopt, ""});
    }
    throw UndecidedError("classify_triple: no criterion fired for " + triple_str(t) +
                         " and the oracle is disabled");
}

bool check_v_symmetric(const RootPoint& Q, int v) {
    if (v < 1) throw std::invalid_argument("check_v_symmetric: v must be >= 1");
    if (Q.d % v != 0) throw std::invalid_argument("check_v_symmetric: v must divide the modulus");

    // Rotation test: shifting every exponent by d/v permutes the multiset?
    std::vector<int> rotated;
    rotated.reserve(Q.exponents.size());
    for (int b : Q.exponents) rotated.push_back((b + Q.d / v) % Q.d);
    std::sort(rotated.begin(), rotated.end());
    const bool by_rotation = rotated == Q.exponents;

    // Algebraic criterion: v | n and e_j(Q) = 0 whenever v does not divide j.
    bool by_lemma = Q.n % v == 0;
    for (int j = 1; j <= Q.n && by_lemma; ++j)
        if (j % v != 0 && !cyclo::cyc_is_zero(cyclo::elementary_at(j, Q))) by_lemma = false;

    if (by_rotation != by_lemma)
        throw std::logic_error("check_v_symmetric: rotation and e_j tests disagree");
    return by_rotation;
}

// --- cache -----------------------------------------------------------------

std::optional<TripleVerdict> TripleCache::lookup(const Triple& t) const {
    auto it = entries_.find({t.n, t.d, t.a});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

bool TripleCache::insert(const Triple& t, const TripleVerdict& v) {
    auto [it, inserted] = entries_.try_emplace({t.n, t.d, t.a}, v);
    if (!inserted && it->second.status != v.status)
        throw std::runtime_error("triple cache conflict at " + triple_str(t) + ": recorded " +
                                 (it->second.status == TStatus::Bad ? "bad" : "good") +
                                 " (reason " + it->second.reason + ") vs new " +
                                 (v.status == TStatus::Bad ? "bad" : "good") + " (reason " +
                                 v.reason + ")");
    return inserted;
}

std::string TripleCache::to_json_line(const Triple& t, const TripleVerdict& v) {
    nlohmann::json j;
    j["n"] = t.n;
    j["d"] = t.d;
    j["a"] = t.a;
    j["status"] = v.status == TStatus::Bad ? "bad" : "good";
    j["reason"] = v.reason;
    if (v.witness_point)
        j["witness"] = {{"d", v.witness_point->d}, {"exponents", v.witness_point->exponents}};
    else if (!v.witness_expr.empty())
        j["witness"] = v.witness_expr;
    return j.dump();
}

std::pair<Triple, TripleVerdict> TripleCache::from_json_line(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    Triple t{j.at("n").get<int>(), j.at("d").get<int>(), j.at("a").get<int>()};
    TripleVerdict v;
    const std::string status = j.at("status").get<std::string>();
    if (status == "bad")
        v.status = TStatus::Bad;
    else if (status == "good")
        v.status = TStatus::Good;
    else
        throw std::runtime_error("triple cache: unknown status '" + status + "'");
    v.reason = j.at("reason").get<std::string>();
    if (j.contains("witness")) {
        const auto& w = j.at("witness");
        if (w.is_string())
            v.witness_expr = w.get<std::string>();
        else
            v.witness_point = cyclo::make_root_point(w.at("d").get<int>(),
                                                     w.at("exponents").get<std::vector<int>>());
    }
    return {t, v};
}

TripleCache TripleCache::load(const std::string& path) {
    TripleCache cache;
    std::ifstream in(path);
    if (!in) return cache;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto [t, v] = from_json_line(line);
        cache.insert(t, v);
    }
    return cache;
}

void TripleCache::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("triple cache: cannot write " + path);
    for (const auto& [key, v] : entries_)
        out << to_json_line({key[0], key[1], key[2]}, v) << "\n";
}

int propagate(TripleCache& cache, const PropagationBounds& bounds) {
    std::deque<Triple> work;
    for (const auto& [key, v] : cache.entries()) work.push_back({key[0], key[1], key[2]});
    int added = 0;
    auto emit = [&](const Triple& target, TripleVerdict v) {
        if (target.n > bounds.max_n || target.d > bounds.max_d || target.a > bounds.max_a) return;
        if (auto existing = cache.lookup(target)) {
            if (existing->status != v.status) cache.insert(target, v);  // throws
            return;
        }
        cache.insert(target, v);
        ++added;
        work.push_back(target);
    };
    while (!work.empty()) {
        Triple t0 = work.front();
        work.pop_front();
        TripleVerdict v0 = *cache.lookup(t0);
        if (v0.status == TStatus::Bad) {
            for (int k = 2; static_cast<long long>(k) * t0.d <= bounds.max_d; ++k)
                emit({t0.n, k * t0.d, t0.a}, {TStatus::Bad, "prop-bad-scale-d",
                                              scale_witness_d(v0.witness_point, k), ""});
            for (int k = 2; static_cast<long long>(k) * t0.n <= bounds.max_n; ++k)
                emit({k * t0.n, t0.d, t0.a}, {TStatus::Bad, "prop-bad-scale-n",
                                              repeat_witness_n(v0.witness_point, k), ""});
            for (int k = 2; static_cast<long long>(k) * t0.n <= bounds.max_n &&
                            static_cast<long long>(k) * t0.d <= bounds.max_d &&
                            static_cast<long long>(k) * t0.a <= bounds.max_a;
                 ++k)
                emit({k * t0.n, k * t0.d, k * t0.a}, {TStatus::Bad, "prop-bad-scale-all",
                                                      spread_witness_all(v0.witness_point, k), ""});
        } else {
            for (int k = 2; static_cast<long long>(k) * t0.a <= bounds.max_a; ++k)
                emit({t0.n, t0.d, k * t0.a}, {TStatus::Good, "prop-good-scale-a", std::nullopt, ""});
            for (int k = 2; static_cast<long long>(k) * t0.d <= bounds.max_d &&
                            static_cast<long long>(k) * t0.a <= bounds.max_a;
                 ++k)
                emit({t0.n, k * t0.d, k * t0.a},
                     {TStatus::Good, "prop-good-scale-da", std::nullopt, ""});
        }
    }
    return added;
}

}  // namespace symreg::triples
