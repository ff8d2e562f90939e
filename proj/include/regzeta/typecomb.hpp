#ifndef REGZETA_TYPECOMB_HPP
#define REGZETA_TYPECOMB_HPP

#include <vector>

#include "regzeta/bigq.hpp"
#include "regzeta/groupkind.hpp"
#include "regzeta/type_triple.hpp"

namespace regzeta {

/* Counting polynomials in the field-size variable t.

   irred_count(d)       number of monic irreducibles of degree d:
                        w_d(t) = (1/d) sum_{r | d} mu(d/r) t^r.
   even_irred_count(d)  number of monic irreducible EVEN polynomials of
                        degree d (nonzero only for even d):
                        E_d(t) = (1/d) sum_{m | d, m odd} mu(m) (t^{d/2m} - 1).
   nonreflexive_count(d) irreducibles of degree d that are neither t nor
                        even: P_1 = t - 1, P_d = w_d - E_d for d >= 2.
   pair_count(d)        unordered reflection pairs {p, p*} of degree d:
                        P_d / 2.  P_d(q) is even for every odd q. */
QPoly irred_count(int d);
QPoly even_irred_count(int d);
QPoly nonreflexive_count(int d);
QPoly pair_count(int d);

/* The type sets X_n (budget identity r + sum d*e*(S+T) = n), in the
   canonical TypeTriple order.  |X_n| = 3, 10, 26, 67 for n = 1..4. */
std::vector<TypeTriple> enumerate_types(int n);
// The r = 0 subset with the given sign (+1 or -1).
std::vector<TypeTriple> enumerate_types_x0(int n, int sign);

/* Number of monic even polynomials of degree 2*weight with fingerprint tau:
   M_tau(t) = prod_d binom(E_{2d}, s_d) * s_d!/prod_e S_{d,e}!
            * binom(P_d/2, t_d) * t_d!/prod_e T_{d,e}!
   with s_d = sum_e S_{d,e}, t_d = sum_e T_{d,e}.  Integer-valued; the mass
   identity sum_{tau in X_n} M_tau = t^n holds as a polynomial. */
QPoly type_mass(const TypeTriple& tau);

/* Centralizer core c^tau(t) = t^n prod (1+t^{-d})^{S_{d,e}} (1-t^{-d})^{T_{d,e}},
   cleared to an integer polynomial (n = weight of tau). */
QPoly centralizer_core(const TypeTriple& tau);

BigInt type_mass_at(const TypeTriple& tau, const BigInt& q);
BigInt centralizer_core_at(const TypeTriple& tau, const BigInt& q);

/* Group order:
   u_1(t)     = t^{n^2} prod_{i=1}^{n} (t^{2i} - 1)            [Sp_2n, SO_{2n+1}]
   u_2^eps(t) = t^{n(n-1)} (t^n - eps) prod_{i=1}^{n-1} (t^{2i} - 1)  [SO_2n^eps] */
QPoly group_order_poly(const GroupKind& kind);
BigInt group_order_at(const GroupKind& kind, const BigInt& q);

}  // namespace regzeta

#endif
