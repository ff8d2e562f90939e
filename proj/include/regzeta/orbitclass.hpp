#ifndef REGZETA_ORBITCLASS_HPP
#define REGZETA_ORBITCLASS_HPP

#include <vector>

#include "regzeta/bigq.hpp"
#include "regzeta/groupkind.hpp"
#include "regzeta/typecomb.hpp"

namespace regzeta {

/* One family of regular adjoint orbits: all orbits sharing a minimal
   polynomial of the given type.  num_polys counts the minimal polynomials in
   the family, each carrying orbits_per_poly orbits of the stated size. */
struct OrbitFamily {
    TypeTriple tau;
    BigInt num_polys;
    int orbits_per_poly = 1;
    BigInt centralizer_order;
    BigInt orbit_size;
    bool singular = false;

    BigInt regular_elements() const { return num_polys * orbits_per_poly * orbit_size; }
};

/* Which types index regular orbits of the given group:
   - Sp_2n, SO_{2n+1}: every tau in X_n;
   - SO_2n^eps: every singular tau (r >= 1), and the r = 0 types whose sign
     (-1)^{sum e*S_{d,e}} equals eps. */
bool is_admissible(const GroupKind& kind, const TypeTriple& tau);

/* Orbits carried by one minimal polynomial of type tau:
   - Sp: 2 when singular, else 1;
   - SOodd: always 1;
   - SOeven: 2 when r = 0 or r >= 2, and 1 when r = 1. */
int orbits_per_poly(const GroupKind& kind, const TypeTriple& tau);

/* Centralizer order of a regular element in G(F_q), symbolically in t:
   - Sp: 2^[r>0] * c^tau;
   - SOodd: c^tau;
   - SOeven r = 0: c^tau;  r >= 2: 2*c^tau;
   - SOeven r = 1: t^{n-1} (t - eps*sigma_tau) prod (1+t^{-d})^S (1-t^{-d})^T
     cleared to a polynomial, sigma_tau = (-1)^{sum e*S_{d,e}}. */
QPoly centralizer_poly(const GroupKind& kind, const TypeTriple& tau);
BigInt centralizer_at(const GroupKind& kind, const TypeTriple& tau, const BigInt& q);

// group_order / centralizer, exact division (symbolic and numeric).
QPoly orbit_size_poly(const GroupKind& kind, const TypeTriple& tau);
BigInt orbit_size_at(const GroupKind& kind, const TypeTriple& tau, const BigInt& q);

/* The complete regular-orbit table of G(F_q): one row per admissible type
   with a positive polynomial count, in canonical type order. */
std::vector<OrbitFamily> classify(const GroupKind& kind, const BigInt& q);

// sum over families of num_polys * orbits_per_poly * orbit_size
BigInt total_regular_elements(const GroupKind& kind, const BigInt& q);

}  // namespace regzeta

#endif
