#ifndef REGZETA_ORACLE_HPP
#define REGZETA_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regzeta/groupkind.hpp"
#include "regzeta/matfq.hpp"
#include "regzeta/orbitclass.hpp"
#include "regzeta/poly.hpp"

namespace regzeta {

/* Budgets for the matrix-level brute force.  scan_limit bounds both the
   exhaustive isometry filter (q^{N^2} candidates) and the Lie-algebra sweep
   (q^{dim g} points); group_limit bounds how many group elements may be
   materialized for the Cayley-closure route. */
struct OracleBudget {
    uint64_t scan_limit = 50'000'000;
    uint64_t group_limit = 2'000'000;
};

// Number of worker threads: REGZETA_THREADS when set, else hardware, capped.
unsigned thread_count();

/* Gram matrix of the defining form:
   Sp_2n:      antidiagonal J[i][N-1-i] = (-1)^i (alternating);
   SO_{2n+1}:  hyperbolic blocks [[0,1],[1,0]] and a final 1;
   SO_2n^+:    n hyperbolic blocks;
   SO_2n^-:    n-1 hyperbolic blocks and the anisotropic block diag(1, -delta),
               delta the least nonsquare. */
MatFq gram_matrix(const GroupKind& kind, const Fq& F);

// Solutions of x^T J + J x = 0; deterministic order; size checked = dim g.
std::vector<MatFq> lie_basis(const GroupKind& kind, const Fq& F, const MatFq& form);

bool in_lie_algebra(const Fq& F, const MatFq& form, const MatFq& x);

/* Regular nilpotent fixture: for Sp/SOodd the full Jordan block with the
   antidiagonal (-1)^i form; for SOeven the (N-1)-block plus a zero line,
   with form d_eta = antidiagonal part + corner eta.  Returns (x, form). */
std::pair<MatFq, MatFq> nilpotent_fixture(const GroupKind& kind, const Fq& F, uint32_t eta);
// Picks eta realizing this kind's Witt type (checked, not assumed).
std::pair<MatFq, MatFq> nilpotent_fixture_for(const GroupKind& kind, const Fq& F);

// Witt index of a nondegenerate symmetric form (DegenerateForm otherwise).
int witt_index(const Fq& F, const MatFq& sym);

/* Regularity by definition: the span of [x, b_i] over a basis b_i of g has
   the minimal centralizer codimension, i.e. rank dim g - n. */
bool is_regular_bruteforce(const Fq& F, const std::vector<MatFq>& basis, const MatFq& x,
                           int rank_needed);

/* Regularity read off the minimal polynomial alone:
   Sp: deg m = 2n, m even;  SOodd: deg m = 2n+1, m odd;
   SOeven: deg m = 2n with m even, or deg m = 2n-1 with m odd. */
bool minpoly_predicate(const GroupKind& kind, const Fq& F, const Poly& m);

// (1 - x)(1 + x)^{-1}; empty when 1 + x is singular.
std::optional<MatFq> cayley(const Fq& F, const MatFq& x);

struct GroupTable {
    std::vector<MatFq> elems;
    std::vector<MatFq> gens;  // empty for the filter strategy
    std::string strategy;     // "filter" or "cayley-bfs"
};

/* All elements of G(F_q), by exhaustive filter over q^{N^2} matrices when
   that fits the budget, else by Cayley-closure BFS from deterministically
   sampled Lie-algebra generators (pool grown until the closure matches the
   group-order polynomial).  CapExceeded when neither route fits. */
GroupTable group_elements(const GroupKind& kind, const Fq& F, const OracleBudget& budget = {});

/* One minimal-polynomial class of regular elements as the scan saw it. */
struct EmpiricalFamily {
    Poly min_poly;
    TypeTriple tau;
    uint64_t class_size = 0;               // regular elements with this minimal polynomial
    std::vector<uint64_t> orbit_sizes;      // ascending
    uint64_t centralizer_order = 0;         // |G| / orbit size, cross-checked by direct scan
};

struct ScanResult {
    std::vector<EmpiricalFamily> families;  // sorted by min_poly
    uint64_t regular_count = 0;
    uint64_t points_scanned = 0;
    uint64_t predicate_mismatches = 0;      // brute-force regularity vs minimal-polynomial rule
};

ScanResult scan_regular_orbits(const GroupKind& kind, const Fq& F, const GroupTable& G,
                               const OracleBudget& budget = {});

/* Matrix-level verification of the whole classification: group order vs the
   order polynomial, per-type polynomial counts, orbit counts, orbit sizes,
   centralizer orders, the census identity, and the regularity predicate.
   Empty diffs == full agreement. */
struct CompareReport {
    GroupKind kind;
    BigInt q;
    std::string strategy;
    BigInt group_order;  // as enumerated
    uint64_t regular_count = 0;
    uint64_t minpoly_classes = 0;
    uint64_t predicate_mismatches = 0;
    std::vector<std::string> diffs;
    bool ok() const { return diffs.empty(); }
};

CompareReport compare_report(const GroupKind& kind, const Fq& F, const OracleBudget& budget = {});

}  // namespace regzeta

#endif
