#include "symreg/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "symreg/upoly.hpp"

namespace symreg::cyclo {

CycElt CycElt::zero(int d) {
    if (d < 1) throw std::invalid_argument("CycElt: modulus must be >= 1");
    return CycElt{d, std::vector<long long>(static_cast<size_t>(d), 0)};
}

CycElt CycElt::one(int d) { return root(d, 0); }

CycElt CycElt::root(int d, long long k) {
    CycElt e = zero(d);
    long long r = k % d;
    if (r < 0) r += d;
    e.coeffs[static_cast<size_t>(r)] = 1;
    return e;
}

static void require_same_modulus(const CycElt& a, const CycElt& b) {
    if (a.d != b.d) throw std::invalid_argument("CycElt: modulus mismatch");
}

CycElt cyc_add(const CycElt& a, const CycElt& b) {
    require_same_modulus(a, b);
    CycElt r = a;
    for (int k = 0; k < a.d; ++k) r.coeffs[static_cast<size_t>(k)] += b.coeffs[static_cast<size_t>(k)];
    return r;
}

CycElt cyc_mul(const CycElt& a, const CycElt& b) {
    require_same_modulus(a, b);
    CycElt r = CycElt::zero(a.d);
    for (int i = 0; i < a.d; ++i) {
        const long long ai = a.coeffs[static_cast<size_t>(i)];
        if (ai == 0) continue;
        for (int j = 0; j < a.d; ++j) {
            const long long bj = b.coeffs[static_cast<size_t>(j)];
            if (bj == 0) continue;
            int k = i + j;
            if (k >= a.d) k -= a.d;
            r.coeffs[static_cast<size_t>(k)] += ai * bj;
        }
    }
    return r;
}

Reducer::Reducer(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("Reducer: modulus must be >= 1");
    const upoly::IntPoly& phi = upoly::cyclotomic(d);
    const int deg = phi.degree();
    // Remainders of t^k modulo the (monic) cyclotomic polynomial, k = 0..d-1.
    rows_.assign(static_cast<size_t>(d), std::vector<long long>(static_cast<size_t>(deg), 0));
    std::vector<long long> cur(static_cast<size_t>(deg), 0);
    for (int k = 0; k < d; ++k) {
        if (k == 0) {
            if (deg > 0) cur[0] = 1;
        } else {
            // multiply by t, then reduce the overflow coefficient
            long long top = deg > 0 ? cur[static_cast<size_t>(deg - 1)] : 0;
            for (int j = deg - 1; j > 0; --j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
            if (deg > 0) cur[0] = 0;
            if (top != 0) {
                for (int j = 0; j < deg; ++j) {
                    cur[static_cast<size_t>(j)] -= top * phi.c[static_cast<size_t>(j)].get_si();
                }
            }
        }
        rows_[static_cast<size_t>(k)] = cur;
    }
}

bool Reducer::is_zero(const std::vector<long long>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != d_) {
        throw std::invalid_argument("Reducer::is_zero: coefficient length mismatch");
    }
    const int deg = phi();
    std::vector<long long> acc(static_cast<size_t>(deg), 0);
    for (int k = 0; k < d_; ++k) {
        const long long ck = coeffs[static_cast<size_t>(k)];
        if (ck == 0) continue;
        const auto& row = rows_[static_cast<size_t>(k)];
        for (int j = 0; j < deg; ++j) acc[static_cast<size_t>(j)] += ck * row[static_cast<size_t>(j)];
    }
    return std::all_of(acc.begin(), acc.end(), [](long long v) { return v == 0; });
}

std::shared_ptr<const Reducer> shared_reducer(int d) {
    static std::map<int, std::shared_ptr<const Reducer>> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(d);
    if (it == memo.end()) it = memo.emplace(d, std::make_shared<Reducer>(d)).first;
    return it->second;
}

bool cyc_is_zero(const CycElt& a) { return shared_reducer(a.d)->is_zero(a.coeffs); }

bool cyc_equal(const CycElt& a, const CycElt& b) {
    require_same_modulus(a, b);
    CycElt diff = a;
    for (int k = 0; k < a.d; ++k) diff.coeffs[static_cast<size_t>(k)] -= b.coeffs[static_cast<size_t>(k)];
    return cyc_is_zero(diff);
}

RootPoint make_root_point(int d, std::vector<int> exponents) {
    if (d < 1) throw std::invalid_argument("RootPoint: modulus must be >= 1");
    if (exponents.empty()) throw std::invalid_argument("RootPoint: empty point");
    for (int b : exponents) {
        if (b < 0 || b >= d) throw std::invalid_argument("RootPoint: exponent out of range");
    }
    std::sort(exponents.begin(), exponents.end());
    if (exponents.front() != 0) throw std::invalid_argument("RootPoint: no coordinate equal to 1");
    RootPoint Q;
    Q.d = d;
    Q.n = static_cast<int>(exponents.size());
    Q.exponents = std::move(exponents);
    return Q;
}

CycElt power_sum_at(long long a, const RootPoint& Q) {
    CycElt r = CycElt::zero(Q.d);
    for (int b : Q.exponents) {
        long long k = (a % Q.d) * b % Q.d;
        if (k < 0) k += Q.d;
        ++r.coeffs[static_cast<size_t>(k)];
    }
    return r;
}

CycElt elementary_at(int j, const RootPoint& Q) {
    if (j < 0 || j > Q.n) throw std::invalid_argument("elementary_at: index out of range");
    // E[k] accumulates e_k of the coordinates processed so far.
    std::vector<CycElt> E(static_cast<size_t>(j) + 1, CycElt::zero(Q.d));
    E[0] = CycElt::one(Q.d);
    for (int b : Q.exponents) {
        for (int k = j; k >= 1; --k) {
            // E[k] += zeta^b * E[k-1], done with an index shift instead of a full cyc_mul
            const auto& prev = E[static_cast<size_t>(k - 1)].coeffs;
            auto& cur = E[static_cast<size_t>(k)].coeffs;
            for (int i = 0; i < Q.d; ++i) {
                if (prev[static_cast<size_t>(i)] == 0) continue;
                int t = i + b;
                if (t >= Q.d) t -= Q.d;
                cur[static_cast<size_t>(t)] += prev[static_cast<size_t>(i)];
            }
        }
    }
    return E[static_cast<size_t>(j)];
}

CycElt galois_conj(const CycElt& a, long long s) {
    long long r = s % a.d;
    if (r < 0) r += a.d;
    if (std::gcd(r, static_cast<long long>(a.d)) != 1) {
        throw std::invalid_argument("galois_conj: s must be coprime to the modulus");
    }
    CycElt out = CycElt::zero(a.d);
    for (int k = 0; k < a.d; ++k) {
        const long long ck = a.coeffs[static_cast<size_t>(k)];
        if (ck == 0) continue;
        out.coeffs[static_cast<size_t>((r * k) % a.d)] += ck;
    }
    return out;
}

}  // namespace symreg::cyclo
