#include "symreg/classify.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace symreg::classify {

namespace {

using mpoly::MPoly;

void validate(const DegSeq& ds, int expected_size) {
    if (ds.n < 1) throw std::invalid_argument("classify: n must be >= 1");
    if (static_cast<int>(ds.degrees.size()) != expected_size)
        throw std::invalid_argument("classify: wrong number of degrees");
    for (int d : ds.degrees)
        if (d < 1) throw std::invalid_argument("classify: degrees must be >= 1");
}

// Entry indices of ds.degrees divisible by m.
std::vector<int> divisible_indices(const DegSeq& ds, int m) {
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(ds.degrees.size()); ++j)
        if (ds.degrees[j] % m == 0) out.push_back(j);
    return out;
}

// The n = 4 exceptional multisets: {1,2,5}, {2,2,5} or {5,2,5} joined with a
// multiple of 12, the multiple singled out in every possible way.
bool is_exception4(const DegSeq& ds) {
    static const std::array<std::array<int, 3>, 3> families = {
        {{1, 2, 5}, {2, 2, 5}, {2, 5, 5}}};
    for (int k = 0; k < 4; ++k) {
        if (ds.degrees[k] % 12 != 0) continue;
        std::array<int, 3> rest{};
        int t = 0;
        for (int j = 0; j < 4; ++j)
            if (j != k) rest[t++] = ds.degrees[j];
        std::sort(rest.begin(), rest.end());
        for (const auto& fam : families)
            if (rest == fam) return true;
    }
    return false;
}

bool augment(int slot, const std::vector<std::vector<int>>& adj, std::vector<int>& entry_slot,
             std::vector<char>& seen) {
    for (int j : adj[slot]) {
        if (seen[j]) continue;
        seen[j] = 1;
        if (entry_slot[j] < 0 || augment(entry_slot[j], adj, entry_slot, seen)) {
            entry_slot[j] = slot;
            return true;
        }
    }
    return false;
}

// d = 2p + 3q with p,q >= 0: q = d mod 2, p = (d - 3q)/2.  Needs d >= 2.
std::pair<int, int> decomp23(int d) {
    if (d < 2) throw std::logic_error("decomp23: degree must be >= 2");
    int q = d % 2;
    int p = (d - 3 * q) / 2;
    if (p < 0) throw std::logic_error("decomp23: no decomposition");
    return {p, q};
}

// d = 3p + 4q with p >= 1, q >= 0, smallest such p.  Valid for odd d >= 3,
// d != 5.
std::pair<int, int> decomp34(int d) {
    if (d % 2 == 0 || d < 3 || d == 5) throw std::logic_error("decomp34: unsupported degree");
    if (d % 4 == 3) return {1, (d - 3) / 4};
    return {3, (d - 9) / 4};
}

// Shared shapes in e-coordinates for n = 4.
MPoly e4_A() {  // e2^3 + e3^2, degree 6
    return pow(mpoly::sym_e(4, 2), 3) + pow(mpoly::sym_e(4, 3), 2);
}
MPoly e4_B() {  // e2^6 + e3^4 + e4^3, degree 12
    return pow(mpoly::sym_e(4, 2), 6) + pow(mpoly::sym_e(4, 3), 4) + pow(mpoly::sym_e(4, 4), 3);
}
MPoly e4_C() {  // e3^4 + e4^3, degree 12
    return pow(mpoly::sym_e(4, 3), 4) + pow(mpoly::sym_e(4, 4), 3);
}

MPoly e2p3q(int n, int d) {  // e2^p * e3^q of degree d = 2p + 3q
    auto [p, q] = decomp23(d);
    return pow(mpoly::sym_e(n, 2), p) * pow(mpoly::sym_e(n, 3), q);
}

bool s22_regular(int a, int c, int d) {
    if (a == 2 || a == 4) return !(c == 1 && d == 1);
    if (a >= 5) {
        DegSeq q{4, {a - 2, a - 4, c, d}};
        return is_permissible(q) && !is_exception4(q);
    }
    return false;
}

// Construction data for one S^(2,2) tuple: h, h' and the symmetric pair.
struct S22Parts {
    MPoly h, hp, f1, f2;
    std::string provenance;
};

S22Parts s22_parts_low(int a, int c, int d) {
    S22Parts out;
    if (a == 2) {
        out.h = mpoly::sym_constant(4, 1);
        out.hp = mpoly::sym_zero(4);
        out.provenance = "s22-a2";
    } else {
        out.h = mpoly::sym_e(4, 2);
        out.hp = mpoly::sym_constant(4, 1);
        out.provenance = "s22-a4";
    }
    if (d >= 2) {
        out.f1 = pow(mpoly::sym_e(4, 1), c);
        out.f2 = e2p3q(4, d);
    } else {  // d = 1 forces c >= 2; swap the construction roles
        out.f1 = e2p3q(4, c);
        out.f2 = mpoly::sym_e(4, 1);
        out.provenance += "-swapped";
    }
    return out;
}

S22Parts s22_parts_even(int a, int c, int d) {
    const MPoly E1 = mpoly::sym_e(4, 1);
    const MPoly E2 = mpoly::sym_e(4, 2);
    const MPoly E3 = mpoly::sym_e(4, 3);
    const MPoly E4 = mpoly::sym_e(4, 4);
    S22Parts out;
    auto set_f_23 = [&](S22Parts& parts) {
        // f1 = e2^p e3^q of degree c with f2 = e1^d, roles swapped when c = 1.
        if (c >= 2) {
            parts.f1 = e2p3q(4, c);
            parts.f2 = pow(E1, d);
        } else {
            parts.f1 = E1;
            parts.f2 = e2p3q(4, d);
            parts.provenance += "-swapped";
        }
    };
    if ((a - 2) % 3 == 0) {
        if ((a - 2) % 12 == 0) {  // a-2 = 12k
            int k = (a - 2) / 12;
            out.h = pow(e4_B(), k);
            out.hp = e4_A() * pow(E4, 3 * k - 2);
            out.provenance = "s22-even-r4";
        } else {  // a-2 = 6k, k odd
            int k = (a - 2) / 6;
            out.h = pow(e4_A(), k);
            out.hp = pow(E4, (3 * k - 1) / 2);
            out.provenance = "s22-even-r5";
        }
        set_f_23(out);
    } else if ((a - 4) % 3 == 0) {
        if ((a - 4) % 12 == 0) {  // a-4 = 12k
            int k = (a - 4) / 12;
            out.h = e4_A() * pow(E4, 3 * k - 1);
            out.hp = pow(e4_B(), k);
            out.provenance = "s22-even-r3";
        } else {  // a-4 = 6k, k odd
            int k = (a - 4) / 6;
            out.h = pow(E4, (3 * k + 1) / 2);
            out.hp = pow(e4_A(), k);
            out.provenance = "s22-even-r6";
        }
        set_f_23(out);
    } else if (c % 3 == 0 || d % 3 == 0) {
        if (a % 4 == 0) {  // a-2 = 4k+2
            int k = (a - 4) / 4;
            out.h = pow(E2, 2 * k + 1);
            out.hp = pow(E4, k);
            out.provenance = "s22-even-r1";
        } else {  // a-2 = 4k
            int k = (a - 2) / 4;
            out.h = pow(E4, k);
            out.hp = pow(E2, 2 * k - 1);
            out.provenance = "s22-even-r2";
        }
        if (c % 3 == 0) {
            out.f1 = pow(E3, c / 3);
            out.f2 = pow(E1, d);
        } else {
            out.f1 = pow(E1, c);
            out.f2 = pow(E3, d / 3);
            out.provenance += "-swapped";
        }
    } else {
        throw std::logic_error("construct_s22: no table row applies");
    }
    return out;
}

S22Parts s22_parts_odd(int a, int c, int d) {
    const MPoly E1 = mpoly::sym_e(4, 1);
    const MPoly E2 = mpoly::sym_e(4, 2);
    const MPoly E3 = mpoly::sym_e(4, 3);
    const MPoly E4 = mpoly::sym_e(4, 4);
    if (c % 2 != 0 || d % 2 != 0)
        throw std::logic_error("construct_s22: odd a requires even c and d");
    // Normalize so the fourth degree is divisible by 4.
    bool swapped = false;
    int cc = c, dd = d;
    if (dd % 4 != 0) {
        std::swap(cc, dd);
        swapped = true;
        if (dd % 4 != 0) throw std::logic_error("construct_s22: 4 divides neither c nor d");
    }
    const MPoly q12 = pow(E1, 2) + E2;  // e1^2 + e2, degree 2
    const MPoly q14 = pow(E1, 4) + E4;  // e1^4 + e4, degree 4
    S22Parts out;
    if ((a - 2) % 3 == 0) {  // a-2 = 3k, k odd
        int k = (a - 2) / 3;
        out.h = pow(E3, k);
        out.hp = pow(E2, (3 * k - 3) / 2) * E1;
        out.f1 = pow(q12, cc / 2);
        out.f2 = pow(E4, dd / 4);
        out.provenance = "s22-odd-r1";
    } else if ((a - 4) % 3 == 0) {  // a-4 = 3k, k odd
        int k = (a - 4) / 3;
        out.h = pow(E2, (3 * k + 1) / 2) * E1;
        out.hp = pow(E3, k);
        out.f1 = pow(q12, cc / 2);
        out.f2 = pow(E4, dd / 4);
        out.provenance = "s22-odd-r2";
    } else if (cc % 3 == 0) {  // 6 | cc
        if (a % 4 == 1) {  // a-2 = 4k-1
            int k = (a - 1) / 4;
            out.h = pow(E2, 2 * k - 2) * E3;
            out.hp = pow(E4, k - 1) * E1;
            out.provenance = "s22-odd-r3";
        } else {  // a-2 = 4k+1
            int k = (a - 3) / 4;
            out.h = pow(E4, k) * E1;
            out.hp = pow(E2, 2 * k - 2) * E3;
            out.provenance = "s22-odd-r5";
        }
        out.f1 = pow(e4_A(), cc / 6);
        out.f2 = pow(q14, dd / 4);
    } else if (dd % 3 == 0) {  // 12 | dd
        if (a % 4 == 1) {
            int k = (a - 1) / 4;
            out.h = pow(E4, k - 1) * E3;
            out.hp = pow(E2, 2 * k - 2) * E1;
            out.provenance = "s22-odd-r4";
        } else {
            int k = (a - 3) / 4;
            out.h = pow(E2, 2 * k) * E1;
            out.hp = pow(E4, k - 1) * E3;
            out.provenance = "s22-odd-r6";
        }
        out.f1 = pow(q12, cc / 2);
        out.f2 = pow(e4_C(), dd / 12);
    } else {
        throw std::logic_error("construct_s22: no table row applies");
    }
    if (swapped) {
        std::swap(out.f1, out.f2);
        out.provenance += "-swapped";
    }
    return out;
}

}  // namespace

BetaReport check_star(const DegSeq& ds) {
    validate(ds, ds.n);
    BetaReport report;
    report.ok = true;
    for (int i = 1; i <= ds.n; ++i) {
        int beta = 0;
        for (int d : ds.degrees)
            if (d % i == 0) ++beta;
        int required = ds.n / i;
        report.beta.push_back(beta);
        report.required.push_back(required);
        if (beta < required) report.ok = false;
    }
    return report;
}

bool check_dagger(const DegSeq& ds) {
    validate(ds, ds.n);
    for (int i = 1; i <= ds.n; ++i) {
        int count = 0;
        for (int d : ds.degrees)
            if (d <= i) ++count;
        if (count > i) return false;
    }
    return true;
}

bool is_permissible(const DegSeq& ds) { return check_star(ds).ok && check_dagger(ds); }

std::optional<std::vector<int>> find_matching(const DegSeq& ds) {
    validate(ds, ds.n);
    std::vector<std::vector<int>> adj(ds.n);
    for (int i = 1; i <= ds.n; ++i) adj[i - 1] = divisible_indices(ds, i);
    std::vector<int> entry_slot(ds.n, -1);
    for (int slot = 0; slot < ds.n; ++slot) {
        std::vector<char> seen(ds.n, 0);
        if (!augment(slot, adj, entry_slot, seen)) return std::nullopt;
    }
    std::vector<int> result(ds.n, -1);
    for (int j = 0; j < ds.n; ++j) result[entry_slot[j]] = j;
    return result;
}

bool is_consecutive_run(const DegSeq& ds) {
    validate(ds, ds.n);
    std::vector<int> sorted = ds.degrees;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k + 1 < ds.n; ++k)
        if (sorted[k + 1] != sorted[k] + 1) return false;
    return true;
}

Verdict classify_symmetric(const DegSeq& ds) {
    validate(ds, ds.n);
    const BetaReport star = check_star(ds);
    const bool dagger = check_dagger(ds);
    auto not_regular = [&]() -> Verdict {
        return {Status::NotRegular, star.ok ? "dagger-fails" : "star-fails", std::nullopt};
    };
    auto regular = [&](std::string reason) -> Verdict {
        return {Status::Regular, std::move(reason), construct_symmetric(ds)};
    };
    if (ds.n == 1) return regular("n1-trivial");
    if (ds.n == 2) return star.ok ? regular("n2-star") : not_regular();
    if (!star.ok || !dagger) return not_regular();
    if (ds.n == 3) return regular("n3-permissible");
    if (ds.n == 4) {
        if (is_exception4(ds)) return {Status::NotRegular, "exception-family", std::nullopt};
        return regular("n4-permissible");
    }
    if (find_matching(ds)) return regular("matching");
    if (is_consecutive_run(ds)) return {Status::Regular, "consecutive-run", std::nullopt};
    return {Status::Unknown, "open-beyond-n4", std::nullopt};
}

ConstructedSeq construct_symmetric(const DegSeq& ds) {
    validate(ds, ds.n);
    const int n = ds.n;
    ConstructedSeq out;
    out.generators.assign(n, mpoly::sym_zero(n));

    if (auto matching = find_matching(ds)) {
        for (int i = 1; i <= n; ++i) {
            int j = (*matching)[i - 1];
            out.generators[j] = pow(mpoly::sym_e(n, i), ds.degrees[j] / i);
        }
        out.provenance = "matching";
        return out;
    }

    if (n == 3) {
        if (!is_permissible(ds))
            throw std::invalid_argument("construct_symmetric: not a regular degree sequence");
        // No matching forces a single entry divisible by 6 while the other
        // two are odd, not divisible by 3, and not both 1.
        auto sixes = divisible_indices(ds, 6);
        if (sixes.empty()) throw std::logic_error("construct_symmetric: expected a multiple of 6");
        int k6 = sixes.front();
        std::vector<int> rest;
        for (int j = 0; j < 3; ++j)
            if (j != k6) rest.push_back(j);
        if (ds.degrees[rest[0]] > ds.degrees[rest[1]]) std::swap(rest[0], rest[1]);
        int d1 = ds.degrees[rest[0]], d2 = ds.degrees[rest[1]];
        if (d2 < 5 || d2 % 2 == 0 || d2 % 3 == 0)
            throw std::logic_error("construct_symmetric: unexpected n=3 shape");
        const MPoly E1 = mpoly::sym_e(3, 1);
        const MPoly E2 = mpoly::sym_e(3, 2);
        const MPoly E3 = mpoly::sym_e(3, 3);
        out.generators[rest[0]] = pow(E1, d1);
        out.generators[rest[1]] = E3 * pow(E2, (d2 - 3) / 2);
        out.generators[k6] = pow(pow(E2, 3) + pow(E3, 2), ds.degrees[k6] / 6);
        out.provenance = "n3-six-odd";
        return out;
    }

    if (n == 4) {
        if (!is_permissible(ds) || is_exception4(ds))
            throw std::invalid_argument("construct_symmetric: not a regular degree sequence");
        const MPoly E1 = mpoly::sym_e(4, 1);
        const MPoly E2 = mpoly::sym_e(4, 2);
        const MPoly E3 = mpoly::sym_e(4, 3);
        const MPoly E4 = mpoly::sym_e(4, 4);
        // First shape: one entry divisible by 6, a distinct one divisible by
        // 4; absence of a matching forces the remaining two to be odd and
        // coprime to 3, the larger at least 5.
        for (int i6 : divisible_indices(ds, 6)) {
            for (int i4 : divisible_indices(ds, 4)) {
                if (i4 == i6) continue;
                std::vector<int> rest;
                for (int j = 0; j < 4; ++j)
                    if (j != i6 && j != i4) rest.push_back(j);
                if (ds.degrees[rest[0]] > ds.degrees[rest[1]]) std::swap(rest[0], rest[1]);
                int d1 = ds.degrees[rest[0]], d2 = ds.degrees[rest[1]];
                if (d2 < 5 || d1 % 2 == 0 || d2 % 2 == 0 || d1 % 3 == 0 || d2 % 3 == 0) continue;
                out.generators[rest[0]] = pow(E1, d1);
                out.generators[rest[1]] = E3 * pow(E2, (d2 - 3) / 2);
                out.generators[i6] = pow(e4_A(), ds.degrees[i6] / 6);
                out.generators[i4] = pow(E4, ds.degrees[i4] / 4);
                out.provenance = "n4-pair-6-4";
                return out;
            }
        }
        // Otherwise an entry divisible by 12 exists; single it out, then
        // branch on the largest even entry among the remaining three.
        auto twelves = divisible_indices(ds, 12);
        if (twelves.empty()) throw std::logic_error("construct_symmetric: expected a multiple of 12");
        int i12 = twelves.front();
        std::vector<int> rest;
        for (int j = 0; j < 4; ++j)
            if (j != i12) rest.push_back(j);
        int i3slot = -1;
        for (int j : rest)
            if (ds.degrees[j] % 2 == 0 && (i3slot < 0 || ds.degrees[j] > ds.degrees[i3slot]))
                i3slot = j;
        if (i3slot < 0) throw std::logic_error("construct_symmetric: expected a second even entry");
        int d3 = ds.degrees[i3slot];
        std::vector<int> rem;
        for (int j : rest)
            if (j != i3slot) rem.push_back(j);
        if (ds.degrees[rem[0]] > ds.degrees[rem[1]]) std::swap(rem[0], rem[1]);
        int d1 = ds.degrees[rem[0]], d2 = ds.degrees[rem[1]];
        if (d3 % 4 == 0) {
            out.generators[rem[0]] = pow(E1, d1);
            out.generators[rem[1]] = e2p3q(4, d2);
            out.generators[i3slot] = pow(E4, d3 / 4);
            out.generators[i12] = pow(e4_B(), ds.degrees[i12] / 12);
            out.provenance = "n4-twelve-e4";
        } else if (d3 >= 6) {
            out.generators[rem[0]] = pow(E1, d1);
            out.generators[rem[1]] = e2p3q(4, d2);
            out.generators[i3slot] = e4_A() * pow(E4, (d3 - 6) / 4);
            out.generators[i12] = pow(e4_B(), ds.degrees[i12] / 12);
            out.provenance = "n4-twelve-six";
        } else {  // d3 == 2: the larger remaining entry is odd >= 7
            int big = rem[1], small = rem[0];
            if (!(ds.degrees[big] % 2 == 1 && ds.degrees[big] >= 7)) {
                std::swap(big, small);
                if (!(ds.degrees[big] % 2 == 1 && ds.degrees[big] >= 7))
                    throw std::logic_error("construct_symmetric: unexpected d3=2 shape");
            }
            auto [p, q] = decomp34(ds.degrees[big]);
            out.generators[small] = pow(E1, ds.degrees[small]);
            out.generators[big] = pow(E3, p) * pow(E4, q);
            out.generators[i3slot] = E2;
            out.generators[i12] = pow(e4_C(), ds.degrees[i12] / 12);
            out.provenance = "n4-twelve-two";
        }
        return out;
    }

    throw std::invalid_argument("construct_symmetric: no construction available for n >= 5");
}

Verdict classify_alternating(const DegSeq& ds, int D) {
    validate(ds, ds.n - 1);
    if (D < 1) throw std::invalid_argument("classify_alternating: degree must be >= 1");
    const int delta_deg = ds.n * (ds.n - 1) / 2;
    if (D < delta_deg) return {Status::NotRegular, "alt-degree-too-small", std::nullopt};
    const int a = D - delta_deg;
    if (a > 0) {
        DegSeq with_g{ds.n, ds.degrees};
        with_g.degrees.push_back(a);
        if (classify_symmetric(with_g).status == Status::NotRegular)
            return {Status::NotRegular, "alt-symmetric-companion", std::nullopt};
    }
    DegSeq with_delta2{ds.n, ds.degrees};
    with_delta2.degrees.push_back(ds.n * (ds.n - 1));
    if (classify_symmetric(with_delta2).status == Status::NotRegular)
        return {Status::NotRegular, "alt-delta-square", std::nullopt};
    return {Status::Unknown, "alt-open-possible", std::nullopt};
}

Verdict classify_s22(int a, int c, int d) {
    if (a < 1 || c < 1 || d < 1) throw std::invalid_argument("classify_s22: degrees must be >= 1");
    if (a == 1) return {Status::NotRegular, "s22-a-too-small", std::nullopt};
    if (a == 3) return {Status::NotRegular, "s22-a-three", std::nullopt};
    if (a == 2 || a == 4) {
        if (c == 1 && d == 1) return {Status::NotRegular, "s22-cd-one-one", std::nullopt};
        return {Status::Regular, "s22-low-degree", construct_s22(a, c, d)};
    }
    DegSeq reduced{4, {a - 2, a - 4, c, d}};
    Verdict inner = classify_symmetric(reduced);
    if (inner.status == Status::Regular)
        return {Status::Regular, "s22-reduction", construct_s22(a, c, d)};
    return {Status::NotRegular, "s22-reduction", std::nullopt};
}

ConstructedSeq construct_s22(int a, int c, int d) {
    if (a < 1 || c < 1 || d < 1) throw std::invalid_argument("construct_s22: degrees must be >= 1");
    if (!s22_regular(a, c, d))
        throw std::invalid_argument("construct_s22: not a regular S^(2,2) tuple");
    S22Parts parts;
    if (a == 2 || a == 4)
        parts = s22_parts_low(a, c, d);
    else if (a % 2 == 0)
        parts = s22_parts_even(a, c, d);
    else
        parts = s22_parts_odd(a, c, d);
    auto [g1, g2] = mpoly::specht_s22_pair(parts.h, parts.hp);
    ConstructedSeq out;
    out.generators = {parts.h, parts.hp, parts.f1, parts.f2};
    out.specht = {std::move(g1), std::move(g2)};
    out.provenance = std::move(parts.provenance);
    return out;
}

groebner::Cert check_s22_split(const MPoly& h, const MPoly& hp, const MPoly& f1, const MPoly& f2,
                               const groebner::Budget& budget) {
    const std::vector<int> eweights = mpoly::sym_weights(4);
    for (const MPoly* p : {&h, &hp, &f1, &f2}) {
        if (p->nvars != 4 || p->weights != eweights)
            throw std::invalid_argument("check_s22_split: expected e-coordinate inputs (n=4)");
    }
    if (f1.is_zero() || f2.is_zero()) return groebner::Cert::No;

    bool budget_hit = false;
    auto fold = [&](groebner::Cert c) -> bool {
        if (c == groebner::Cert::Budget) budget_hit = true;
        return c == groebner::Cert::No;
    };

    // (1) h, h', f1, f2 in e-coordinates.
    if (fold(groebner::verify_regular_maximal({h, hp, f1, f2}, eweights, budget)))
        return groebner::Cert::No;

    const MPoly x1 = mpoly::MPoly::variable(4, 1);
    const MPoly x2 = mpoly::MPoly::variable(4, 2);
    const MPoly x3 = mpoly::MPoly::variable(4, 3);
    const MPoly x4 = mpoly::MPoly::variable(4, 4);
    const MPoly s1 = (x1 - x2) * (x3 - x4);
    const MPoly s2 = (x1 - x3) * (x2 - x4);
    const MPoly F1 = mpoly::expand_sym(f1, 4);
    const MPoly F2 = mpoly::expand_sym(f2, 4);
    const std::vector<int> ones(4, 1);

    // (2) the two degree-2 module generators with f1, f2.
    if (fold(groebner::verify_regular_maximal({s1, s2, F1, F2}, ones, budget)))
        return groebner::Cert::No;

    // (3) (x1-x2)(x3-x4), h2, f1, f2 with h2 = H + H'(x1+x3)(x2+x4).
    const MPoly h2 = mpoly::expand_sym(h, 4) + mpoly::expand_sym(hp, 4) * (x1 + x3) * (x2 + x4);
    if (fold(groebner::verify_regular_maximal({s1, h2, F1, F2}, ones, budget)))
        return groebner::Cert::No;

    return budget_hit ? groebner::Cert::Budget : groebner::Cert::Yes;
}

}  // namespace symreg::classify
