#ifndef REGZETA_GROUPKIND_HPP
#define REGZETA_GROUPKIND_HPP

#include <string>

#include "regzeta/error.hpp"

namespace regzeta {

enum class Family { Sp, SOodd, SOeven };

/* One of the groups Sp_2n, SO_{2n+1}, SO_2n^eps over F_q; eps in {+1,-1}
   is meaningful only for SOeven (Witt index n vs n-1). */
struct GroupKind {
    Family fam = Family::Sp;
    int n = 1;
    int eps = 0;

    GroupKind() = default;
    GroupKind(Family f, int rank, int sign = 0);

    int N() const;      // matrix size
    int dim_g() const;  // dimension of the Lie algebra
    int alpha() const;  // (dim_g - n) / 2

    std::string name() const;  // "sp", "so-odd", "so-even-plus", "so-even-minus"
    static GroupKind parse(const std::string& name, int n);

    bool operator==(const GroupKind&) const = default;
};

}  // namespace regzeta

#endif
