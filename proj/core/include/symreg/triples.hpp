#pragma once

// Good/bad classification of triples (n, d, a): does some symmetric
// polynomial of degree a complete x_1^d - x_n^d, ..., x_{n-1}^d - x_n^d to a
// regular sequence?  Equivalently, is there a symmetric degree-a polynomial
// not vanishing identically on V_d = {z : z_i^d = 1, z_n = 1}?  A triple is
// bad exactly when a single point of V_d annihilates every symmetric
// polynomial of degree a.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symreg/cyclo.hpp"

namespace symreg::triples {

struct Triple {
    int n = 1, d = 1, a = 1;
    bool operator==(const Triple&) const = default;
};

enum class TStatus { Good = 0, Bad = 1 };

struct TripleVerdict {
    TStatus status = TStatus::Good;
    std::string reason;  // criterion identifier from a fixed enumeration
    // For Bad: a point of V_d at which all degree-a symmetric polynomials
    // vanish.  For Good: a textual non-vanishing witness polynomial (may be
    // empty when the criterion is non-constructive).
    std::optional<cyclo::RootPoint> witness_point;
    std::string witness_expr;
};

// Raised when no criterion fires and the oracle is disabled or exhausted.
struct UndecidedError : std::runtime_error {
    explicit UndecidedError(const std::string& what) : std::runtime_error(what) {}
};

// All nondecreasing exponent vectors of the given length with entries in
// [0, d), in lexicographic order.  The visitor returns false to stop early;
// the function returns false iff stopped.
bool enumerate_exponent_multisets(int length, int d,
                                  const std::function<bool(const std::vector<int>&)>& visit);

// The C(d+n-2, n-1) canonical points of V_d: multisets of n-1 exponents with
// a forced extra 0.  Deterministic order; early stop as above.
bool enumerate_vd(int n, int d, const std::function<bool(const cyclo::RootPoint&)>& visit);

// Number of canonical points, C(d+n-2, n-1).
unsigned long long vd_count(int n, int d);

// All partitions of a with parts <= max_part, parts decreasing, in
// deterministic (descending lexicographic) order.  Empty when a >= 1 has no
// such partition (max_part < 1); the unique empty partition when a = 0.
std::vector<std::vector<int>> partitions(int a, int max_part);

struct OracleResult {
    bool decided = false;  // false iff the point budget ran out
    bool bad = false;
    std::optional<cyclo::RootPoint> witness;
    unsigned long long points_visited = 0;
};

// Exhaustive scan of V_d.  A point Q is a witness iff every partition of a
// with parts <= n contains a part m with P_m(Q) = 0; the scan per point
// computes V(Q) = {m <= min(n,a) : P_m(Q) = 0} after the cheap P_1 filter
// (if P_1(Q) != 0 the all-ones partition survives and Q is rejected).
// Exact integer arithmetic throughout.  max_points = 0 means unlimited.
OracleResult is_bad_oracle(const Triple& t, unsigned long long max_points = 0);

class TripleCache;

// Criteria cascade, cheapest first; the first firing criterion decides.
//   1  bad-gcd                  gcd(n,d) does not divide a
//   2  good-gamma               n not in Gamma(d / gcd(a,d))
//   3  good-en-power            n | a (witness e_n^{a/n})
//   4  good-divisor-semigroup   a in <{q : q | d, n not in Gamma(d/q)} + {n}>
//   5  bad-coprime              n in Gamma(d) and a not in Gamma(d)
//   6  good-prime-power         d a prime power (and gcd | a after step 1)
//   7  good-two-prime           n < p + q, the two smallest primes of d
//   8  good-large-a             a >= (n-g)(d-g)/g with g = gcd(n,d) | a
//   9  cache lookup, including closure under the propagation rules
//   10 oracle scan (when allowed)
// Fresh verdicts are recorded in the cache when one is supplied.  Throws
// UndecidedError when undecidable within the allowed means.
TripleVerdict classify_triple(const Triple& t, bool allow_oracle = true,
                              TripleCache* cache = nullptr, unsigned long long max_points = 0);

// Is the rotation of Q by a primitive v-th root of unity a permutation of Q?
// Requires v >= 1 and v | d.  Also evaluates the algebraic criterion
// [v | n and e_j(Q) = 0 for all j with v does not divide j] and throws
// std::logic_error if the two tests ever disagree.
bool check_v_symmetric(const cyclo::RootPoint& Q, int v);

// Persistent store of verdicts, JSON lines on disk, one object per line:
//   {"a":int,"d":int,"n":int,"reason":str,"status":"good"|"bad","witness":...}
// Witness is either an exponent-list object (bad) or a string (good) and is
// omitted when absent.  Existing verdicts never change; inserting a
// contradictory verdict throws std::runtime_error.
class TripleCache {
public:
    using Key = std::array<int, 3>;  // {n, d, a}

    std::optional<TripleVerdict> lookup(const Triple& t) const;
    // True if the entry is new; false if an identical-status entry existed.
    bool insert(const Triple& t, const TripleVerdict& v);
    std::size_t size() const { return entries_.size(); }
    const std::map<Key, TripleVerdict>& entries() const { return entries_; }

    static TripleCache load(const std::string& path);  // missing file -> empty
    void save(const std::string& path) const;          // canonical sorted lines

    static std::string to_json_line(const Triple& t, const TripleVerdict& v);
    static std::pair<Triple, TripleVerdict> from_json_line(const std::string& line);

private:
    std::map<Key, TripleVerdict> entries_;
};

struct PropagationBounds {
    int max_n = 0, max_d = 0, max_a = 0;
};

// Closure of the cache within bounds under
//   Bad(n,d,a)  => Bad(n,kd,a), Bad(kn,d,a), Bad(kn,kd,ka)
//   Good(n,d,a) => Good(n,d,ka), Good(n,kd,ka)
// carrying bad witnesses along.  Returns the number of entries added;
// conflicts throw std::runtime_error.
int propagate(TripleCache& cache, const PropagationBounds& bounds);

}  // namespace symreg::triples
