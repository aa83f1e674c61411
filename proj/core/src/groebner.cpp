#include "symreg/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <tuple>

namespace symreg::groebner {

using mpoly::Rat;

bool mono_less(const Monomial& a, const Monomial& b, const TermOrder& order) {
    long da = mpoly::weighted_degree(a, order.weights);
    long db = mpoly::weighted_degree(b, order.weights);
    if (da != db) return da < db;
    // reverse lexicographic tie-break: scanning from the last variable, the
    // first difference decides; the larger exponent there marks the SMALLER monomial
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

Monomial leading_monomial(const MPoly& p, const TermOrder& order) {
    if (p.is_zero()) throw std::invalid_argument("leading_monomial: zero polynomial");
    auto it = p.terms.begin();
    Monomial best = it->first;
    for (++it; it != p.terms.end(); ++it) {
        if (mono_less(best, it->first, order)) best = it->first;
    }
    return best;
}

namespace {

using Int = mpz_class;

struct Term {
    Monomial m;
    Int c;
};

// Internal polynomial: terms sorted descending in the active order, integer
// coefficients with content 1 and positive leading coefficient.  Working over
// primitive integer polynomials keeps Buchberger fraction-free; scaling by
// nonzero constants never changes the ideal.
using ZPoly = std::vector<Term>;

struct Ctx {
    TermOrder order;
    Budget budget;
    long steps = 0;
    std::chrono::steady_clock::time_point start;
    bool out_of_budget = false;

    bool charge(long units = 1) {
        steps += units;
        if (budget.max_steps > 0 && steps > budget.max_steps) {
            out_of_budget = true;
            return false;
        }
        if (budget.max_millis > 0 && (steps & 0xff) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            if (ms > budget.max_millis) {
                out_of_budget = true;
                return false;
            }
        }
        return true;
    }
};

void normalize(ZPoly& p) {
    if (p.empty()) return;
    Int content = 0;
    for (const auto& t : p) content = gcd(content, t.c);
    if (p.front().c < 0) content = -content;
    if (content != 1) {
        for (auto& t : p) t.c /= content;
    }
}

ZPoly from_mpoly(const MPoly& p, const TermOrder& order) {
    // clear denominators
    Int den = 1;
    for (const auto& [m, c] : p.terms) den = lcm(den, Int(c.get_den()));
    ZPoly out;
    out.reserve(p.terms.size());
    for (const auto& [m, c] : p.terms) {
        out.push_back({m, Int(c.get_num()) * (den / Int(c.get_den()))});
    }
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
        return mono_less(b.m, a.m, order);  // descending
    });
    normalize(out);
    return out;
}

MPoly to_mpoly_monic(const ZPoly& p, int nvars, const std::vector<int>& weights) {
    MPoly out = MPoly::zero_weighted(nvars, weights);
    if (p.empty()) return out;
    Rat lead(p.front().c);
    for (const auto& t : p) {
        Rat c = Rat(t.c) / lead;
        c.canonicalize();
        out.terms.emplace(t.m, c);
    }
    return out;
}

bool divides(const Monomial& a, const Monomial& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Monomial mono_quot(const Monomial& b, const Monomial& a) {  // b / a
    Monomial q(b.size());
    for (size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial l(a.size());
    for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0 && b[i] > 0) return false;
    }
    return true;
}

// r := u*r - v*shift(g, q), fused sorted-merge; all inputs sorted descending.
ZPoly axpy(const ZPoly& r, const Int& u, const Int& v, const ZPoly& g, const Monomial& q,
           const Ctx& ctx) {
    ZPoly out;
    out.reserve(r.size() + g.size());
    size_t i = 0, j = 0;
    Monomial shifted(q.size());
    auto shift_of = [&](size_t jj) -> const Monomial& {
        const Monomial& gm = g[jj].m;
        for (size_t k = 0; k < q.size(); ++k) shifted[k] = gm[k] + q[k];
        return shifted;
    };
    while (i < r.size() || j < g.size()) {
        if (j >= g.size()) {
            out.push_back({r[i].m, u * r[i].c});
            ++i;
            continue;
        }
        const Monomial& gs = shift_of(j);
        if (i >= r.size()) {
            out.push_back({gs, -v * g[j].c});
            ++j;
            continue;
        }
        if (r[i].m == gs) {
            Int c = u * r[i].c - v * g[j].c;
            if (c != 0) out.push_back({r[i].m, std::move(c)});
            ++i;
            ++j;
        } else if (mono_less(gs, r[i].m, ctx.order)) {
            out.push_back({r[i].m, u * r[i].c});
            ++i;
        } else {
            out.push_back({gs, -v * g[j].c});
            ++j;
        }
    }
    return out;
}

// Full normal form of p against basis (first dividing element by index wins).
// The result is primitive; zero output means p reduces to zero.
ZPoly normal_form(ZPoly p, const std::vector<ZPoly>& basis, Ctx& ctx) {
    ZPoly done;  // irreducible prefix, kept scaled in step with p
    while (!p.empty()) {
        bool reduced = false;
        for (const ZPoly& g : basis) {
            if (g.empty()) continue;
            if (!divides(g.front().m, p.front().m)) continue;
            if (!ctx.charge()) return {};
            const Int& a = p.front().c;
            const Int& b = g.front().c;
            Int l = gcd(a, b);
            Int u = b / l, v = a / l;
            if (u < 0) {
                u = -u;
                v = -v;
            }
            Monomial q = mono_quot(p.front().m, g.front().m);
            p = axpy(p, u, v, g, q, ctx);
            if (u != 1) {
                for (auto& t : done) t.c *= u;
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            done.push_back(std::move(p.front()));
            p.erase(p.begin());
        }
    }
    normalize(done);
    return done;
}

struct Pair {
    long degree;  // weighted degree of the lcm
    long serial;
    size_t i, j;
};
struct PairLess {
    bool operator()(const Pair& a, const Pair& b) const {
        return std::tie(a.degree, a.serial) < std::tie(b.degree, b.serial);
    }
};

// --- mod-p fast path -------------------------------------------------------
//
// For homogeneous generators, zero-dimensionality transfers from F_p to Q:
// the degree-k quotient is the cokernel of the Macaulay multiplication
// matrix, whose rank over F_p is at most its rank over Q.  If the mod-p
// quotient vanishes in every sufficiently large degree (which pure-power
// leading terms certify), the rational quotient vanishes there too.  So a
// mod-p Groebner basis that proves zero-dimensionality is a genuine
// certificate; any other outcome falls back to the exact computation.

namespace modp {

constexpr long long P = 2147483647LL;  // 2^31 - 1

long long mul(long long a, long long b) {
    return static_cast<long long>(
        static_cast<unsigned long long>(a) * static_cast<unsigned long long>(b) %
        static_cast<unsigned long long>(P));
}

long long inv(long long a) {
    long long result = 1, base = a % P;
    for (long long e = P - 2; e > 0; e >>= 1) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

// Monomials packed into one 128-bit key: the weighted degree in the top
// bits, then one 16-bit field per variable holding 0xFFFF - exponent,
// ordered so the LAST variable sits highest.  With that complement layout a
// plain integer comparison is exactly weighted degrevlex (larger degree
// wins; on ties the smaller exponent from the back wins), and monomial
// product / quotient are key addition / subtraction with a constant offset.
using Key = unsigned __int128;

constexpr int kMaxVars = 6;        // 32 + 16 * 6 = 128 bits
constexpr int kMaxExponent = 0x4000;  // headroom so field sums never carry

struct Packer {
    int nvars = 0;
    std::vector<int> weights;
    Key off = 0;  // 0xFFFF in every exponent field

    explicit Packer(const TermOrder& order)
        : nvars(static_cast<int>(order.weights.size())), weights(order.weights) {
        for (int i = 0; i < nvars; ++i) off |= Key(0xFFFF) << (16 * i);
    }

    // Field for variable i sits at bits [16*(nvars-1-i), ...): the last
    // variable is most significant, as degrevlex ties demand.
    int shift_of(int var) const { return 16 * (nvars - 1 - var); }

    std::optional<Key> pack(const Monomial& m) const {
        long long wdeg = 0;
        Key k = 0;
        for (int i = 0; i < nvars; ++i) {
            int e = m[static_cast<size_t>(i)];
            if (e >= kMaxExponent) return std::nullopt;
            wdeg += static_cast<long long>(weights[static_cast<size_t>(i)]) * e;
            k |= Key(0xFFFF - e) << shift_of(i);
        }
        if (wdeg >= (1LL << 31)) return std::nullopt;
        return k | (Key(wdeg) << (16 * nvars));
    }

    int exponent(Key k, int var) const {
        return 0xFFFF - static_cast<int>((k >> shift_of(var)) & 0xFFFF);
    }
    long wdeg(Key k) const { return static_cast<long>(k >> (16 * nvars)); }

    Key key_mul(Key a, Key b) const { return a + b - off; }
    Key key_div(Key a, Key b) const { return a - b + off; }  // requires b | a

    bool key_divides(Key a, Key b) const {  // a | b fieldwise
        for (int i = 0; i < nvars; ++i) {
            int s = shift_of(i);
            if (((a >> s) & 0xFFFF) < ((b >> s) & 0xFFFF)) return false;
        }
        return true;
    }
    bool key_coprime(Key a, Key b) const {
        for (int i = 0; i < nvars; ++i) {
            int s = shift_of(i);
            if (((a >> s) & 0xFFFF) != 0xFFFF && ((b >> s) & 0xFFFF) != 0xFFFF) return false;
        }
        return true;
    }
    Key key_lcm(Key a, Key b) const {
        Key k = 0;
        long long wdeg = 0;
        for (int i = 0; i < nvars; ++i) {
            int s = shift_of(i);
            Key f = std::min((a >> s) & 0xFFFF, (b >> s) & 0xFFFF);  // min complement = max exponent
            k |= f << s;
            wdeg += static_cast<long long>(weights[static_cast<size_t>(i)]) *
                    (0xFFFF - static_cast<int>(f));
        }
        return k | (Key(wdeg) << (16 * nvars));
    }
};

struct PTerm {
    Key k;
    long long c;  // in [1, P)
};
using MP = std::vector<PTerm>;  // sorted by key descending, monic

void make_monic(MP& p) {
    if (p.empty() || p.front().c == 1) return;
    long long s = inv(p.front().c);
    for (auto& t : p) t.c = mul(t.c, s);
}

// r[from..] - c * x^q * g with x^q * g realized by adding qoff = key(q) - off.
MP axpy(const MP& r, size_t from, long long c, const MP& g, Key qoff) {
    MP out;
    out.reserve(r.size() - from + g.size());
    size_t i = from, j = 0;
    while (i < r.size() || j < g.size()) {
        if (j >= g.size()) {
            out.push_back(r[i]);
            ++i;
        } else if (i >= r.size() || r[i].k < g[j].k + qoff) {
            long long v = P - mul(c, g[j].c);
            if (v != P) out.push_back({g[j].k + qoff, v});
            ++j;
        } else if (r[i].k == g[j].k + qoff) {
            long long v = (r[i].c - mul(c, g[j].c)) % P;
            if (v < 0) v += P;
            if (v != 0) out.push_back({r[i].k, v});
            ++i;
            ++j;
        } else {
            out.push_back(r[i]);
            ++i;
        }
    }
    return out;
}

// Full normal form; basis elements are monic.  Irreducible leading terms
// accumulate in `done`; a reduction replaces the live tail wholesale.
MP normal_form(MP p, const std::vector<MP>& basis, const Packer& pk, long& steps, long max_steps,
               bool& exhausted) {
    MP done;
    size_t from = 0;
    while (from < p.size()) {
        const MP* red = nullptr;
        for (const MP& g : basis) {
            if (!g.empty() && pk.key_divides(g.front().k, p[from].k)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            done.push_back(p[from]);
            ++from;
            continue;
        }
        if (++steps > max_steps) {
            exhausted = true;
            return {};
        }
        Key qoff = pk.key_div(p[from].k, red->front().k) - pk.off;
        p = axpy(p, from, p[from].c, *red, qoff);
        from = 0;
    }
    return done;
}

enum class Outcome { ZeroDim, Inconclusive };

Outcome zero_dim(const std::vector<ZPoly>& gens, const TermOrder& order, long max_steps) {
    Packer pk(order);
    if (pk.nvars < 1 || pk.nvars > kMaxVars) return Outcome::Inconclusive;

    std::vector<MP> G;
    for (const ZPoly& g : gens) {
        MP r;
        r.reserve(g.size());
        for (const auto& t : g) {
            long long c = mpz_fdiv_ui(t.c.get_mpz_t(), static_cast<unsigned long>(P));
            if (c == 0) continue;
            auto key = pk.pack(t.m);
            if (!key) return Outcome::Inconclusive;  // exponents out of packing range
            r.push_back({*key, c});
        }
        std::sort(r.begin(), r.end(), [](const PTerm& a, const PTerm& b) { return a.k > b.k; });
        make_monic(r);
        if (!r.empty()) G.push_back(std::move(r));
    }
    long steps = 0;
    bool exhausted = false;

    std::set<Pair, PairLess> pending;
    long serial = 0;
    auto queue_pairs_with = [&](size_t jnew) {
        for (size_t i = 0; i < jnew; ++i) {
            if (pk.key_coprime(G[i].front().k, G[jnew].front().k)) continue;
            Key l = pk.key_lcm(G[i].front().k, G[jnew].front().k);
            pending.insert({pk.wdeg(l), serial++, i, jnew});
        }
    };
    for (size_t j = 0; j < G.size(); ++j) queue_pairs_with(j);

    while (!pending.empty()) {
        Pair pr = *pending.begin();
        pending.erase(pending.begin());
        const MP& f = G[pr.i];
        const MP& g = G[pr.j];
        Key l = pk.key_lcm(f.front().k, g.front().k);
        MP spoly;
        spoly.reserve(f.size());
        Key foff = pk.key_div(l, f.front().k) - pk.off;
        for (const auto& t : f) spoly.push_back({t.k + foff, t.c});
        spoly = axpy(spoly, 0, 1, g, pk.key_div(l, g.front().k) - pk.off);
        MP h = normal_form(std::move(spoly), G, pk, steps, max_steps, exhausted);
        if (exhausted) return Outcome::Inconclusive;
        if (!h.empty()) {
            make_monic(h);
            G.push_back(std::move(h));
            queue_pairs_with(G.size() - 1);
        }
    }

    for (const MP& g : G) {
        if ((g.front().k & pk.off) == pk.off) return Outcome::ZeroDim;  // unit: empty locus
    }
    for (int v = 0; v < pk.nvars; ++v) {
        bool found = false;
        for (const MP& g : G) {
            Key lt = g.front().k;
            bool pure = pk.exponent(lt, v) > 0;
            for (int u = 0; pure && u < pk.nvars; ++u) {
                if (u != v && pk.exponent(lt, u) > 0) pure = false;
            }
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return Outcome::Inconclusive;
    }
    return Outcome::ZeroDim;
}

}  // namespace modp

}  // namespace

GBResult buchberger(const std::vector<MPoly>& gens, const TermOrder& order, const Budget& budget) {
    GBResult res;
    int nvars = -1;
    for (const MPoly& g : gens) {
        if (nvars < 0) nvars = g.nvars;
        if (g.nvars != nvars) throw std::invalid_argument("buchberger: mixed variable counts");
    }
    if (nvars < 0) return res;  // no generators at all
    if (static_cast<int>(order.weights.size()) != nvars) {
        throw std::invalid_argument("buchberger: order weight count mismatch");
    }

    Ctx ctx{order, budget};
    ctx.start = std::chrono::steady_clock::now();

    std::vector<ZPoly> G;
    for (const MPoly& g : gens) {
        if (g.is_zero()) continue;
        G.push_back(from_mpoly(g, order));
    }

    std::set<Pair, PairLess> pending;
    long serial = 0;
    auto queue_pairs_with = [&](size_t jnew) {
        for (size_t i = 0; i < jnew; ++i) {
            if (coprime(G[i].front().m, G[jnew].front().m)) continue;  // S-poly reduces to 0
            Monomial l = mono_lcm(G[i].front().m, G[jnew].front().m);
            pending.insert({mpoly::weighted_degree(l, order.weights), serial++, i, jnew});
        }
    };
    for (size_t j = 0; j < G.size(); ++j) queue_pairs_with(j);

    while (!pending.empty()) {
        Pair pr = *pending.begin();
        pending.erase(pending.begin());
        const ZPoly& f = G[pr.i];
        const ZPoly& g = G[pr.j];
        Monomial l = mono_lcm(f.front().m, g.front().m);
        // S(f, g) = (b/h) * (l/lt f) f - (a/h) * (l/lt g) g  with h = gcd of lead coefficients
        Int h = gcd(f.front().c, g.front().c);
        ZPoly lifted;
        {
            Monomial qf = mono_quot(l, f.front().m);
            Int scale = g.front().c / h;
            lifted.reserve(f.size());
            for (const auto& t : f) {
                Monomial m(t.m.size());
                for (size_t k = 0; k < m.size(); ++k) m[k] = t.m[k] + qf[k];
                lifted.push_back({std::move(m), scale * t.c});
            }
        }
        Monomial qg = mono_quot(l, g.front().m);
        ZPoly spoly = axpy(lifted, Int(1), f.front().c / h, g, qg, ctx);
        normalize(spoly);

        ZPoly h2 = normal_form(std::move(spoly), G, ctx);
        if (ctx.out_of_budget) {
            res.budget_exceeded = true;
            res.steps = ctx.steps;
            return res;
        }
        if (!h2.empty()) {
            G.push_back(std::move(h2));
            queue_pairs_with(G.size() - 1);
        }
    }

    // minimalize: drop any element whose leading monomial is divisible by another's
    std::vector<char> keep(G.size(), 1);
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (divides(G[j].front().m, G[i].front().m) &&
                !(G[i].front().m == G[j].front().m && j > i)) {
                keep[i] = 0;
                break;
            }
        }
    }
    std::vector<ZPoly> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        if (keep[i]) minimal.push_back(std::move(G[i]));
    }
    // tail-reduce each element against the others
    std::vector<ZPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<ZPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        ZPoly r = normal_form(minimal[i], others, ctx);
        if (ctx.out_of_budget) {
            res.budget_exceeded = true;
            res.steps = ctx.steps;
            return res;
        }
        if (!r.empty()) reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const ZPoly& a, const ZPoly& b) {
        return mono_less(a.front().m, b.front().m, order);
    });

    res.steps = ctx.steps;
    res.basis.reserve(reduced.size());
    for (const ZPoly& p : reduced) res.basis.push_back(to_mpoly_monic(p, nvars, order.weights));
    return res;
}

Cert is_zero_dimensional_homogeneous(const std::vector<MPoly>& gens, const TermOrder& order,
                                     const Budget& budget) {
    // Mod-p first: a zero-dimensionality proof over F_p transfers to Q (see
    // the note above modp), and the small-field run is orders of magnitude
    // cheaper.  Anything else falls through to the exact computation.  The
    // small-field step allowance scales with the caller's budget (its steps
    // are far cheaper than exact ones) so that tiny budgets stay tiny.
    {
        std::vector<ZPoly> zgens;
        for (const MPoly& g : gens) {
            if (!g.is_zero()) zgens.push_back(from_mpoly(g, order));
        }
        long cap = budget.max_steps <= 0 ? 5000000
                                         : static_cast<long>(std::min<long long>(
                                               5000000, 100LL * budget.max_steps));
        if (modp::zero_dim(zgens, order, cap) == modp::Outcome::ZeroDim) return Cert::Yes;
    }
    GBResult gb = buchberger(gens, order, budget);
    if (gb.budget_exceeded) return Cert::Budget;
    const int nvars = static_cast<int>(order.weights.size());
    for (const MPoly& g : gb.basis) {
        if (g.is_constant() && !g.is_zero()) return Cert::Yes;  // empty zero locus
    }
    for (int v = 0; v < nvars; ++v) {
        bool found = false;
        for (const MPoly& g : gb.basis) {
            Monomial lt = leading_monomial(g, order);
            bool pure = lt[static_cast<size_t>(v)] > 0;
            for (int u = 0; pure && u < nvars; ++u) {
                if (u != v && lt[static_cast<size_t>(u)] > 0) pure = false;
            }
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return Cert::No;
    }
    return Cert::Yes;
}

static void require_homogeneous(const std::vector<MPoly>& seq, const std::vector<int>& weights) {
    for (const MPoly& p : seq) {
        if (p.is_zero()) continue;
        MPoly copy = p;
        copy.weights = weights;
        if (!copy.homogeneous_degree()) {
            throw std::invalid_argument("sequence entry is not homogeneous for the given weights");
        }
    }
}

Cert verify_regular_maximal(const std::vector<MPoly>& seq, const std::vector<int>& weights,
                            const Budget& budget) {
    const int nvars = static_cast<int>(weights.size());
    if (static_cast<int>(seq.size()) != nvars) {
        throw std::invalid_argument("verify_regular_maximal: sequence length must equal variable count");
    }
    require_homogeneous(seq, weights);
    // Zero entries contribute nothing to the ideal; with fewer than n honest
    // generators the locus cannot shrink to a point unless a unit appears,
    // and the pure-power test handles both situations uniformly.
    return is_zero_dimensional_homogeneous(seq, TermOrder{weights}, budget);
}

Cert verify_regular_partial(const std::vector<MPoly>& seq, const std::vector<int>& weights,
                            const Budget& budget) {
    const int nvars = static_cast<int>(weights.size());
    const int t = static_cast<int>(seq.size());
    if (t >= nvars) {
        throw std::invalid_argument("verify_regular_partial: sequence length must be below the variable count");
    }
    for (const MPoly& p : seq) {
        if (p.is_zero()) return Cert::No;  // zero is a zerodivisor
    }
    require_homogeneous(seq, weights);
    if (t == 0) return Cert::Yes;
    TermOrder order{weights};
    GBResult gb = buchberger(seq, order, budget);
    if (gb.budget_exceeded) return Cert::Budget;

    std::vector<Monomial> lts;
    lts.reserve(gb.basis.size());
    for (const MPoly& g : gb.basis) lts.push_back(leading_monomial(g, order));

    // dimension of the leading-term ideal: the largest variable subset that
    // avoids the support of every leading monomial
    int best = 0;
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        bool free_set = true;
        for (const Monomial& lt : lts) {
            bool inside = true;
            for (int v = 0; v < nvars && inside; ++v) {
                if (lt[static_cast<size_t>(v)] > 0 && !(mask & (1u << v))) inside = false;
            }
            if (inside) {  // this leading monomial lives inside the candidate subset
                free_set = false;
                break;
            }
        }
        if (free_set) best = std::max(best, __builtin_popcount(mask));
    }
    int codim = nvars - best;
    return codim == t ? Cert::Yes : Cert::No;
}

}  // namespace symreg::groebner
