#include "symreg/numth.hpp"

#include <numeric>
#include <stdexcept>

namespace symreg::numth {

PrimeFactorization factorize(long long m) {
    if (m < 1) throw std::invalid_argument("factorize: argument must be >= 1");
    PrimeFactorization out;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

std::vector<long long> prime_divisors(long long m) {
    std::vector<long long> out;
    for (const auto& [p, e] : factorize(m)) out.push_back(p);
    return out;
}

bool semigroup_contains(const SemigroupGens& g, long long m) {
    if (m < 0) return false;
    if (m == 0) return true;
    // reachable[v] = v is a nonnegative combination of the generators
    std::vector<char> reachable(static_cast<size_t>(m) + 1, 0);
    reachable[0] = 1;
    for (long long v = 1; v <= m; ++v) {
        for (long long gen : g.gens) {
            if (gen >= 1 && gen <= v && reachable[v - gen]) {
                reachable[v] = 1;
                break;
            }
        }
    }
    return reachable[static_cast<size_t>(m)] != 0;
}

bool gamma_contains(long long d, long long m) {
    if (d < 1) throw std::invalid_argument("gamma_contains: modulus must be >= 1");
    if (m < 0) return false;
    if (d == 1) return m == 0;  // Gamma(1) = {0}
    return semigroup_contains(SemigroupGens{prime_divisors(d)}, m);
}

long long sylvester_bound(long long p, long long q) {
    if (p < 2 || q < 2) throw std::invalid_argument("sylvester_bound: generators must be >= 2");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("sylvester_bound: generators must be coprime");
    return (p - 1) * (q - 1);
}

}  // namespace symreg::numth
