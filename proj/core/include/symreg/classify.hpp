#pragma once

// Classification of degree sequences realizable by regular sequences of
// symmetric polynomials in C[x_1..x_n], together with explicit constructions,
// the reduction for sequences containing one alternating polynomial, and the
// n = 4 theory for sequences spanning a copy of the Specht module S^(2,2).

#include <optional>
#include <string>
#include <vector>

#include "symreg/groebner.hpp"
#include "symreg/mpoly.hpp"

namespace symreg::classify {

// A multiset of degrees in an ambient polynomial ring with n variables.  For
// maximal questions |degrees| == n; classify_alternating takes n-1 entries.
struct DegSeq {
    int n = 0;
    std::vector<int> degrees;  // all entries >= 1
};

enum class Status { Regular = 0, NotRegular = 1, Unknown = 2 };

// Divisor counts beta_i = #{j : i | d_j} for i = 1..n and the threshold
// floor(n/i) each must reach.
struct BetaReport {
    bool ok = false;
    std::vector<int> beta;      // beta[i-1]
    std::vector<int> required;  // required[i-1] = floor(n/i)
};

// An explicit certificate: symmetric generators in e-coordinates (weights
// 1..n), aligned with the input degree order so generators[j] is homogeneous
// of weighted degree degrees[j].  For the S^(2,2) case the generators are
// (h, h', f1, f2) and `specht` holds the two degree-a module generators g1,
// g2 in x-coordinates.  `provenance` names the construction case from a
// fixed enumeration (e.g. "matching", "n4-pair-6-4", "s22-odd-r1").
struct ConstructedSeq {
    std::vector<mpoly::MPoly> generators;
    std::vector<mpoly::MPoly> specht;
    std::string provenance;
};

struct Verdict {
    Status status = Status::Unknown;
    std::string reason;  // identifier from a fixed enumeration
    std::optional<ConstructedSeq> certificate;
};

// Condition (*): beta_i >= floor(n/i) for all i = 1..n.
BetaReport check_star(const DegSeq& ds);

// Condition (+): #{j : d_j <= i} <= i for all i = 1..n.
bool check_dagger(const DegSeq& ds);

// Both conditions.
bool is_permissible(const DegSeq& ds);

// A permutation assigning slot i = 1..n to a distinct entry with i | d_pi(i),
// as 0-based indices into `degrees` (result[i-1] = entry index), found by
// augmenting-path bipartite matching; nullopt iff none exists.
std::optional<std::vector<int>> find_matching(const DegSeq& ds);

// Is the sorted multiset a run of n consecutive integers a, a+1, .., a+n-1?
bool is_consecutive_run(const DegSeq& ds);

// Decide whether some regular sequence of symmetric polynomials has these
// degrees.  Decisive for n <= 4:
//   n = 1: always Regular; n = 2: Regular iff (*); n = 3: Regular iff
//   permissible; n = 4: Regular iff permissible and the multiset is not one
//   of {1,2,5}, {2,2,5}, {5,2,5} joined with a multiple of 12.
// For n >= 5: NotRegular when not permissible; Regular when a matching
// exists or the degrees are consecutive; otherwise Unknown.
// Regular verdicts for n <= 4 always carry a certificate.
Verdict classify_symmetric(const DegSeq& ds);

// Explicit generators for a Regular sequence with n <= 4 (any n when a
// matching exists).  Throws std::invalid_argument unless
// classify_symmetric(ds) is Regular.
ConstructedSeq construct_symmetric(const DegSeq& ds);

// Degrees ds (|degrees| = n-1, symmetric slots) plus one alternating
// polynomial of degree D.  Every alternating polynomial is g*Delta with
// deg Delta = n(n-1)/2 and g symmetric, so with a := D - n(n-1)/2 the
// sequence forces both (ds, a) and (ds, n(n-1)) to be regular degree
// sequences (the latter via Delta^2).  Verdicts are NotRegular or Unknown;
// no sufficiency criterion is implemented.
Verdict classify_alternating(const DegSeq& ds, int D);

// Existence of a regular sequence g1, g2, f1, f2 with g1, g2 spanning a copy
// of S^(2,2) in degree a and symmetric f1, f2 of degrees c, d (ambient
// n = 4).  Regular iff [a in {2,4} and (c,d) != (1,1)] or [a >= 5 and
// (a-2, a-4, c, d) is a regular degree sequence].
Verdict classify_s22(int a, int c, int d);

// Explicit (h, h', f1, f2) with deg h = a-2, deg h' = a-4, plus the Specht
// pair g1, g2 built from them.  Throws std::invalid_argument unless
// classify_s22(a, c, d) is Regular.
ConstructedSeq construct_s22(int a, int c, int d);

// The split criterion for g1, g2, f1, f2 built from symmetric h, h', f1, f2
// (e-coordinates, n = 4): the sequence is regular iff all three of
//   (1) h, h', f1, f2                                   (e-coordinates)
//   (2) (x1-x2)(x3-x4), (x1-x3)(x2-x4), f1, f2          (x-coordinates)
//   (3) (x1-x2)(x3-x4), h2, f1, f2                      (x-coordinates)
// are regular, where h2 = H + H'*(x1+x3)(x2+x4) for the x-expansions H, H'.
// Returns Yes/No, or Budget when a Groebner run hits the budget.
groebner::Cert check_s22_split(const mpoly::MPoly& h, const mpoly::MPoly& hp,
                               const mpoly::MPoly& f1, const mpoly::MPoly& f2,
                               const groebner::Budget& budget = {2000000, 0});

}  // namespace symreg::classify
