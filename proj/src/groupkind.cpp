#include "regzeta/groupkind.hpp"

namespace regzeta {

GroupKind::GroupKind(Family f, int rank, int sign) : fam(f), n(rank), eps(sign) {
    if (n < 1) fail(Errc::InvalidRank, "rank must be at least 1");
    if (fam == Family::SOeven) {
        if (n < 2) fail(Errc::InvalidRank, "so-even needs rank at least 2 (so_2 is a torus)");
        if (eps != 1 && eps != -1) fail(Errc::InvalidRank, "so-even needs a Witt sign of +1 or -1");
    } else if (eps != 0) {
        fail(Errc::InvalidRank, "Witt sign applies only to so-even");
    }
}

int GroupKind::N() const { return fam == Family::SOodd ? 2 * n + 1 : 2 * n; }

int GroupKind::dim_g() const {
    switch (fam) {
        case Family::Sp:
        case Family::SOodd:
            return n * (2 * n + 1);
        case Family::SOeven:
            return n * (2 * n - 1);
    }
    return 0;
}

int GroupKind::alpha() const { return (dim_g() - n) / 2; }

std::string GroupKind::name() const {
    switch (fam) {
        case Family::Sp:
            return "sp";
        case Family::SOodd:
            return "so-odd";
        case Family::SOeven:
            return eps > 0 ? "so-even-plus" : "so-even-minus";
    }
    return "?";
}

GroupKind GroupKind::parse(const std::string& name, int n) {
    if (name == "sp") return GroupKind(Family::Sp, n);
    if (name == "so-odd") return GroupKind(Family::SOodd, n);
    if (name == "so-even-plus") return GroupKind(Family::SOeven, n, +1);
    if (name == "so-even-minus") return GroupKind(Family::SOeven, n, -1);
    fail(Errc::InvalidRank, "unknown group family '" + name +
                                "' (expected sp, so-odd, so-even-plus, so-even-minus)");
}

}  // namespace regzeta
