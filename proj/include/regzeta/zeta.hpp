#ifndef REGZETA_ZETA_HPP
#define REGZETA_ZETA_HPP

#include <map>
#include <utility>
#include <vector>

#include "regzeta/bigq.hpp"
#include "regzeta/groupkind.hpp"
#include "regzeta/orbitclass.hpp"

namespace regzeta {

/* Finite Dirichlet polynomial sum a * m^{-s}: terms sorted by m, merged,
   zero counts dropped. */
struct DirichletTerm {
    BigInt m;  // character degree
    BigInt a;  // multiplicity
    bool operator==(const DirichletTerm&) const = default;
};

struct DirichletPoly {
    std::vector<DirichletTerm> terms;
    bool operator==(const DirichletPoly&) const = default;
    void add_term(const BigInt& m, const BigInt& a);
    void normalize();
    BigInt total_weighted() const;  // sum a * m  (= |G| * number of orbits when built from orbits)
};

/* Route 1: assemble D(s) = sum over regular orbits of |C_Omega| * |Omega|^{-s}
   from the classified orbit families. */
DirichletPoly dirichlet_from_families(const GroupKind& kind, const BigInt& q);

/* Route 2: direct transcription of the closed-form theorems,
   sum over types of (coefficient) * (orbit size)^{-s}, assembled without the
   family table.  Must equal route 1 after merging. */
DirichletPoly dirichlet_closed_form(const GroupKind& kind, const BigInt& q);

/* Symbolic versions of both routes: map from orbit-size polynomial to the
   summed coefficient polynomial, in the field-size variable t. */
std::map<QPoly, QPoly> dirichlet_symbolic_families(const GroupKind& kind);
std::map<QPoly, QPoly> dirichlet_symbolic_closed_form(const GroupKind& kind);

/* Level-1 numerator plus the geometric denominator data of
   zeta^reg(s) = D(s) / (1 - q^{n - alpha*s}), alpha = (dim G - n)/2. */
struct RegZetaSeries {
    GroupKind kind;
    BigInt q;
    DirichletPoly level1;
    int alpha = 0;
};

RegZetaSeries reg_zeta(const GroupKind& kind, const BigInt& q);

/* Ledger of regular character degrees by level: layer l scales layer 1 by
   q^{(l-1)n} in counts and q^{(l-1)alpha} in degrees; merged accumulates
   layers 1..levels sorted by degree. */
struct Ledger {
    std::vector<std::vector<DirichletTerm>> layers;
    std::vector<DirichletTerm> merged;
};

Ledger expand(const RegZetaSeries& series, int levels);

// Abscissa of convergence n/alpha as a reduced fraction.
std::pair<long, long> abscissa(const GroupKind& kind);

}  // namespace regzeta

#endif
