#ifndef REGZETA_TYPE_TRIPLE_HPP
#define REGZETA_TYPE_TRIPLE_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>

namespace regzeta {

/* Combinatorial fingerprint (r, S, T) of a parity-symmetric monic polynomial:
   r is half the multiplicity of the factor t, S_{d,e} counts the distinct
   even irreducible factors of degree 2d occurring with multiplicity e, and
   T_{d,e} counts the reflection pairs {p, p*}, p*(t) the monic normalization
   of p(-t) != p, of degree-d irreducibles at multiplicity e.

   The budget identity r + sum d*e*(S_{d,e} + T_{d,e}) = n puts the type in
   X_n; r = 0 members are the nonsingular part X_n^0, split by the sign
   (-1)^{sum e*S_{d,e}} into X_n^{0,+1} and X_n^{0,-1}. */
struct TypeTriple {
    int r = 0;
    std::map<std::pair<int, int>, int> S;  // (d, e) -> count >= 1
    std::map<std::pair<int, int>, int> T;

    int weight() const;
    bool singular() const { return r > 0; }
    int sum_eS() const;
    int sign() const { return sum_eS() % 2 ? -1 : +1; }

    auto operator<=>(const TypeTriple&) const = default;

    std::string str() const;
};

}  // namespace regzeta

#endif
