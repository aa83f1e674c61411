// Acceptance gate: the release-blocking behaviors, one line of output per
// criterion, nonzero exit when any of them fails.  Every tolerance and time
// budget is pinned here in code.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "symreg/classify.hpp"
#include "symreg/cyclo.hpp"
#include "symreg/groebner.hpp"
#include "symreg/mpoly.hpp"
#include "symreg/numth.hpp"
#include "symreg/triples.hpp"
#include "symreg/upoly.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f ms", ms);
    return buf;
}

// ---- criterion 1: the graded quotient of a known borderline sequence ----

Outcome criterion1() {
    using namespace symreg::upoly;
    IntPoly expect;
    for (long c : {1L, 1L, 0L, 1L, 2L, 0L, 0L, 2L, 1L, 0L, 1L, 1L}) expect.c.emplace_back(c);
    expect.normalize();

    const double budget_ms = 1.0;
    double best = 1e9;
    bool ok = true;
    for (int rep = 0; rep < 5; ++rep) {
        auto t0 = Clock::now();
        auto r = hilbert_quotient({2, 5, 2, 12});
        best = std::min(best, ms_since(t0));
        ok = ok && r.integral && r.nonnegative && r.quotient == expect && r.coeff_sum == 10;
    }
    if (!ok) return {false, "wrong quotient for degrees 2,5,2,12"};
    if (best > budget_ms) return {false, "slow: " + fmt(best) + " > " + fmt(budget_ms)};
    return {true, "quotient frozen, nonnegative yet not regular; " + fmt(best)};
}

// ---- criterion 2: the full classification for four variables ----

bool independent_permissible(const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    for (int i = 1; i <= n; ++i) {
        int c = 0;
        for (int x : d)
            if (x % i == 0) ++c;
        if (c < n / i) return false;
    }
    std::vector<int> s = d;
    std::sort(s.begin(), s.end());
    for (int i = 1; i <= n; ++i) {
        int c = 0;
        for (int x : s)
            if (x <= i) ++c;
        if (c > i) return false;
    }
    return true;
}

bool independent_exception(const std::vector<int>& d) {
    static const std::vector<std::array<int, 3>> families = {{1, 2, 5}, {2, 2, 5}, {2, 5, 5}};
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] % 12 != 0) continue;
        std::array<int, 3> rest{};
        int k = 0;
        for (std::size_t j = 0; j < d.size(); ++j)
            if (j != i) rest[static_cast<std::size_t>(k++)] = d[j];
        std::sort(rest.begin(), rest.end());
        for (const auto& f : families)
            if (rest == f) return true;
    }
    return false;
}

Outcome criterion2() {
    using namespace symreg::classify;
    const double budget_ms = 5 * 60 * 1000.0;
    auto t0 = Clock::now();

    int total = 0, regular = 0, verified = 0, discrepancies = 0, bad_certs = 0;
    for (int d1 = 1; d1 <= 16; ++d1)
        for (int d2 = d1; d2 <= 16; ++d2)
            for (int d3 = d2; d3 <= 16; ++d3)
                for (int d4 = d3; d4 <= 16; ++d4) {
                    ++total;
                    DegSeq ds{4, {d1, d2, d3, d4}};
                    Verdict v = classify_symmetric(ds);
                    bool expect_regular =
                        independent_permissible(ds.degrees) && !independent_exception(ds.degrees);
                    if ((v.status == Status::Regular) != expect_regular) {
                        ++discrepancies;
                        continue;
                    }
                    if (v.status != Status::Regular) continue;
                    ++regular;
                    if (!v.certificate) {
                        ++bad_certs;
                        continue;
                    }
                    if (d4 <= 12) {
                        ++verified;
                        if (symreg::groebner::verify_regular_maximal(v.certificate->generators,
                                                                     {1, 2, 3, 4}) !=
                            symreg::groebner::Cert::Yes)
                            ++bad_certs;
                    }
                }

    double ms = ms_since(t0);
    char head[160];
    std::snprintf(head, sizeof head, "%d multisets, %d regular, %d certificates verified", total,
                  regular, verified);
    if (total != 3876) return {false, "expected 3876 multisets, saw " + std::to_string(total)};
    if (discrepancies || bad_certs)
        return {false, std::string(head) + "; " + std::to_string(discrepancies) + " discrepancies, " +
                           std::to_string(bad_certs) + " bad certificates"};
    if (ms > budget_ms) return {false, std::string(head) + "; slow: " + fmt(ms)};
    return {true, std::string(head) + "; " + fmt(ms)};
}

// ---- criterion 3: the reference verdict vector for mixed triples ----

Outcome criterion3() {
    using namespace symreg::triples;
    const double budget_ms = 2 * 60 * 1000.0;
    struct Row {
        Triple t;
        TStatus expect;
    };
    const std::vector<Row> rows = {
        {{4, 15, 1}, TStatus::Good}, {{8, 15, 1}, TStatus::Bad},  {{4, 30, 1}, TStatus::Bad},
        {{8, 30, 1}, TStatus::Bad},  {{8, 15, 2}, TStatus::Bad},  {{8, 30, 2}, TStatus::Bad},
        {{8, 15, 4}, TStatus::Bad},  {{8, 15, 8}, TStatus::Good}, {{8, 30, 8}, TStatus::Good},
        {{16, 15, 8}, TStatus::Good}, {{5, 6, 1}, TStatus::Bad},
    };
    auto t0 = Clock::now();
    TripleCache cache;
    int wrong = 0;
    std::string first_wrong;
    for (const auto& row : rows) {
        TripleVerdict v = classify_triple(row.t, true, &cache);
        if (v.status != row.expect) {
            ++wrong;
            if (first_wrong.empty())
                first_wrong = std::to_string(row.t.n) + "," + std::to_string(row.t.d) + "," +
                              std::to_string(row.t.a);
        }
    }
    double ms = ms_since(t0);
    if (wrong) return {false, std::to_string(wrong) + " wrong verdicts, first at (" + first_wrong + ")"};
    if (ms > budget_ms) return {false, "slow: " + fmt(ms)};
    return {true, "11 verdicts as recorded; " + fmt(ms)};
}

// ---- criterion 4: criteria never contradict the oracle on a dense grid ----

Outcome criterion4() {
    using namespace symreg::triples;
    const double budget_ms = 10 * 60 * 1000.0;
    auto t0 = Clock::now();
    int fired = 0, skipped = 0, conflicts = 0;
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 10; ++d)
            for (int a = 1; a <= 24; ++a) {
                TripleVerdict v;
                try {
                    v = classify_triple({n, d, a}, false);
                } catch (const UndecidedError&) {
                    ++skipped;
                    continue;
                }
                ++fired;
                OracleResult o = is_bad_oracle({n, d, a});
                if (!o.decided || (v.status == TStatus::Bad) != o.bad) ++conflicts;
            }
    double ms = ms_since(t0);
    char head[160];
    std::snprintf(head, sizeof head, "%d fired, %d undecided, %d conflicts", fired, skipped, conflicts);
    if (conflicts) return {false, head};
    if (ms > budget_ms) return {false, std::string(head) + "; slow: " + fmt(ms)};
    return {true, std::string(head) + "; " + fmt(ms)};
}

// ---- criterion 5: prime-power moduli obey the gcd law ----

Outcome criterion5() {
    using namespace symreg::triples;
    const double budget_ms = 10 * 60 * 1000.0;
    auto t0 = Clock::now();
    int checked = 0, wrong = 0;
    for (int d : {2, 3, 4, 8, 9})
        for (int n = 1; n <= 8; ++n)
            for (int a = 1; a <= 20; ++a) {
                OracleResult o = is_bad_oracle({n, d, a});
                ++checked;
                bool law = (a % std::gcd(n, d) != 0);
                if (!o.decided || o.bad != law) ++wrong;
            }
    double ms = ms_since(t0);
    if (wrong) return {false, std::to_string(wrong) + " of " + std::to_string(checked) + " disagree"};
    if (ms > budget_ms) return {false, "slow: " + fmt(ms)};
    return {true, std::to_string(checked) + " triples follow the gcd law; " + fmt(ms)};
}

// ---- criterion 6: vanishing sums exist exactly on the prime semigroup ----

Outcome criterion6() {
    using namespace symreg::triples;
    const double budget_ms = 10 * 60 * 1000.0;
    auto t0 = Clock::now();
    int wrong = 0, checked = 0;
    for (int d = 1; d <= 12; ++d) {
        auto reducer = symreg::cyclo::shared_reducer(d);
        for (int n = 1; n <= 10; ++n) {
            bool found = false;
            enumerate_exponent_multisets(n, d, [&](const std::vector<int>& exps) {
                std::vector<long long> coeffs(static_cast<std::size_t>(d), 0);
                for (int e : exps) ++coeffs[static_cast<std::size_t>(e)];
                if (reducer->is_zero(coeffs)) {
                    found = true;
                    return false;
                }
                return true;
            });
            ++checked;
            if (found != symreg::numth::gamma_contains(d, n)) ++wrong;
        }
    }
    double ms = ms_since(t0);
    if (wrong) return {false, std::to_string(wrong) + " of " + std::to_string(checked) + " disagree"};
    if (ms > budget_ms) return {false, "slow: " + fmt(ms)};
    return {true, std::to_string(checked) + " pairs match the semigroup rule; " + fmt(ms)};
}

// ---- criterion 7: the paired-generator family splits and verifies ----

Outcome criterion7() {
    using namespace symreg::classify;
    const double budget_ms = 10 * 60 * 1000.0;
    auto t0 = Clock::now();
    int regular = 0, failures = 0;
    std::string first_fail;
    auto note_fail = [&](int a, int c, int d) {
        ++failures;
        if (first_fail.empty())
            first_fail = "(" + std::to_string(a) + "," + std::to_string(c) + "," + std::to_string(d) + ")";
    };
    for (int a = 1; a <= 14; ++a)
        for (int c = 1; c <= 8; ++c)
            for (int d = 1; d <= 8; ++d) {
                Verdict v = classify_s22(a, c, d);
                if (a == 3 && v.status != Status::NotRegular) note_fail(a, c, d);
                if ((a == 2 || a == 4) && c == 1 && d == 1 && v.status != Status::NotRegular)
                    note_fail(a, c, d);
                if (v.status != Status::Regular) continue;
                ++regular;
                ConstructedSeq cs = construct_s22(a, c, d);
                if (check_s22_split(cs.generators[0], cs.generators[1], cs.generators[2],
                                    cs.generators[3]) != symreg::groebner::Cert::Yes)
                    note_fail(a, c, d);
            }
    double ms = ms_since(t0);
    char head[160];
    std::snprintf(head, sizeof head, "%d regular data split-verified", regular);
    if (failures)
        return {false, std::string(head) + "; " + std::to_string(failures) + " failures, first " +
                           first_fail};
    if (ms > budget_ms) return {false, std::string(head) + "; slow: " + fmt(ms)};
    return {true, std::string(head) + "; " + fmt(ms)};
}

// ---- criterion 8: alternating-slot exclusions are instant ----

Outcome criterion8() {
    using namespace symreg::classify;
    const double budget_ms = 1000.0;
    auto t0 = Clock::now();
    DegSeq ds{4, {1, 2, 5}};
    Verdict v18 = classify_alternating(ds, 18);
    Verdict v6 = classify_alternating(ds, 6);
    double ms = ms_since(t0);
    if (v18.status != Status::NotRegular || v6.status != Status::NotRegular)
        return {false, "expected both alternating data to be excluded"};
    if (ms > budget_ms) return {false, "slow: " + fmt(ms)};
    return {true, "degrees 18 and 6 both excluded; " + fmt(ms)};
}

// ---- criterion 9: the degree-6 stretch systems ----

Outcome criterion9() {
    using namespace symreg::mpoly;
    using symreg::groebner::Budget;
    using symreg::groebner::Cert;
    using symreg::groebner::verify_regular_maximal;
    const double budget_ms = 10 * 60 * 1000.0;
    auto t0 = Clock::now();

    const int n = 5;
    auto x = [&](int i) { return MPoly::variable(n, i); };
    auto xpow = [&](int i, int k) {
        MPoly p = MPoly::constant(n, 1);
        for (int j = 0; j < k; ++j) p = p * x(i);
        return p;
    };

    // g_i = sum_{j=2..5} e_j * (x_i^{6-j} - x_5^{6-j}), i = 1..4, plus e_1
    std::vector<MPoly> mixed;
    for (int i = 1; i <= 4; ++i) {
        MPoly gi = MPoly::zero(n);
        for (int j = 2; j <= 5; ++j) gi = gi + elementary(n, j) * (xpow(i, 6 - j) - xpow(5, 6 - j));
        mixed.push_back(gi);
    }
    mixed.push_back(elementary(n, 1));

    // the plain companions x_i^6 - x_5^6 with e_1
    std::vector<MPoly> plain;
    for (int i = 1; i <= 4; ++i) plain.push_back(xpow(i, 6) - xpow(5, 6));
    plain.push_back(elementary(n, 1));

    const std::vector<int> ones(n, 1);
    Budget b{2000000000L, static_cast<long>(budget_ms)};
    Cert cm = verify_regular_maximal(mixed, ones, b);
    Cert cp = verify_regular_maximal(plain, ones, b);
    double ms = ms_since(t0);

    if (cm == Cert::Budget || cp == Cert::Budget)
        return {true, "inconclusive-stretch (budget hit); " + fmt(ms)};
    if (cm != Cert::Yes) return {false, "mixed system not certified regular"};
    if (cp != Cert::No) return {false, "plain power system not refuted"};
    if (ms > budget_ms) return {false, "slow: " + fmt(ms)};
    return {true, "mixed system regular, plain powers not; " + fmt(ms)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"graded quotient pins the borderline sequence", criterion1},
        {"four-variable classification sweep", criterion2},
        {"reference triple verdicts", criterion3},
        {"criteria vs oracle on the dense grid", criterion4},
        {"prime-power gcd law", criterion5},
        {"vanishing sums match the prime semigroup", criterion6},
        {"paired-generator family split checks", criterion7},
        {"alternating-slot exclusions", criterion8},
        {"degree-6 stretch systems", criterion9},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("criterion %zu [%s]: %s — %s\n", i + 1, criteria[i].first,
                    o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %zu of %zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
