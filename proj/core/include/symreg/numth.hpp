#pragma once

// Integer arithmetic foundations: factorization, gcd helpers, and membership
// in numerical semigroups.  The central object is Gamma(d), the numerical
// semigroup generated by the prime divisors of d (with Gamma(1) = {0} by
// convention), which governs when a sum of n d-th roots of unity can vanish.

#include <cstdint>
#include <vector>

namespace symreg::numth {

struct PrimeFactor {
    long long prime;
    int exponent;
    bool operator==(const PrimeFactor&) const = default;
};

// Ordered factorization m = p1^e1 * ... * pk^ek with p1 < p2 < ...; empty for m = 1.
using PrimeFactorization = std::vector<PrimeFactor>;

// Trial-division factorization.  Requires m >= 1; throws std::invalid_argument otherwise.
PrimeFactorization factorize(long long m);

// The distinct prime divisors of m, increasing.  Empty for m = 1.
std::vector<long long> prime_divisors(long long m);

// Generators of a numerical semigroup (nonnegative integer combinations).
struct SemigroupGens {
    std::vector<long long> gens;
};

// True iff m is a nonnegative integer combination of the generators.
// Computed by a boolean table over 0..m; m = 0 is always a member.
bool semigroup_contains(const SemigroupGens& g, long long m);

// True iff m lies in Gamma(d), the numerical semigroup generated by the prime
// divisors of d.  Gamma(1) = {0}, so gamma_contains(1, m) iff m = 0.
bool gamma_contains(long long d, long long m);

// The classical bound for two coprime generators p, q >= 2: every
// m >= (p-1)(q-1) is representable as a nonnegative combination of p and q,
// and (p-1)(q-1) - 1 is not.  Throws std::invalid_argument unless
// gcd(p,q) = 1 and p, q >= 2.
long long sylvester_bound(long long p, long long q);

}  // namespace symreg::numth
