#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "regzeta/orbitclass.hpp"
#include "test_util.hpp"

using namespace regzeta;
using regzeta_test::thrown;

namespace {

TypeTriple tt(int r, std::map<std::pair<int, int>, int> S, std::map<std::pair<int, int>, int> T) {
    TypeTriple t;
    t.r = r;
    t.S = std::move(S);
    t.T = std::move(T);
    return t;
}

struct Row {
    BigInt num_polys;
    int orbits;
    BigInt centralizer;
    BigInt orbit_size;
};

std::map<TypeTriple, Row> rows_of(const std::vector<OrbitFamily>& fams) {
    std::map<TypeTriple, Row> out;
    for (const auto& f : fams)
        out[f.tau] = Row{f.num_polys, f.orbits_per_poly, f.centralizer_order, f.orbit_size};
    return out;
}

void check_row(const std::map<TypeTriple, Row>& rows, const TypeTriple& tau, const Row& want) {
    auto it = rows.find(tau);
    REQUIRE(it != rows.end());
    CHECK(it->second.num_polys == want.num_polys);
    CHECK(it->second.orbits == want.orbits);
    CHECK(it->second.centralizer == want.centralizer);
    CHECK(it->second.orbit_size == want.orbit_size);
}

}  // namespace

TEST_CASE("rank-one symplectic table at q = 3") {
    GroupKind sp1(Family::Sp, 1);
    auto rows = rows_of(classify(sp1, BigInt(3)));
    REQUIRE(rows.size() == 3);
    check_row(rows, tt(1, {}, {}), {1, 2, 6, 4});             // nilpotent: split pair of orbits
    check_row(rows, tt(0, {{{1, 1}, 1}}, {}), {1, 1, 4, 6});  // anisotropic torus
    check_row(rows, tt(0, {}, {{{1, 1}, 1}}), {1, 1, 2, 12}); // split torus
    CHECK(total_regular_elements(sp1, BigInt(3)) == 26);      // q^3 - 1
    // the q^3 - 1 census in general
    for (long q : {5l, 7l, 9l})
        CHECK(total_regular_elements(sp1, BigInt(q)) == BigInt(q) * q * q - 1);
}

TEST_CASE("rank-one odd orthogonal table at q = 3") {
    GroupKind so3(Family::SOodd, 1);
    auto rows = rows_of(classify(so3, BigInt(3)));
    REQUIRE(rows.size() == 3);
    // every minimal polynomial carries exactly one orbit
    check_row(rows, tt(1, {}, {}), {1, 1, 3, 8});
    check_row(rows, tt(0, {{{1, 1}, 1}}, {}), {1, 1, 4, 6});
    check_row(rows, tt(0, {}, {{{1, 1}, 1}}), {1, 1, 2, 12});
    CHECK(total_regular_elements(so3, BigInt(3)) == 26);
}

/* The even orthogonal tables below are frozen from an exhaustive matrix
   enumeration of so_4^+(F_5) (|G| = 14400) and so_4^-(F_5) (|G| = 15600):
   every regular element was found, grouped by minimal polynomial, and its
   orbit and centralizer counted directly. */
TEST_CASE("even orthogonal plus table at (n, q) = (2, 5)") {
    GroupKind so4p(Family::SOeven, 2, +1);
    auto rows = rows_of(classify(so4p, BigInt(5)));
    REQUIRE(rows.size() == 8);
    // singular types: r = 2 nilpotent splits, r = 1 does not
    check_row(rows, tt(2, {}, {}), {1, 2, 50, 288});                 // minpoly t^3
    check_row(rows, tt(1, {}, {{{1, 1}, 1}}), {2, 1, 16, 900});      // t^3 + t, t^3 + 4t
    check_row(rows, tt(1, {{{1, 1}, 1}}, {}), {2, 1, 36, 400});      // t^3 + 2t, t^3 + 3t
    // r = 0 types of sign +1, each with the split pair of orbits
    check_row(rows, tt(0, {{{1, 1}, 2}}, {}), {1, 2, 36, 400});      // t^4 + 1
    check_row(rows, tt(0, {{{1, 2}, 1}}, {}), {2, 2, 30, 480});      // (t^2+2)^2, (t^2+3)^2
    check_row(rows, tt(0, {}, {{{1, 1}, 2}}), {1, 2, 16, 900});      // t^4 + 4
    check_row(rows, tt(0, {}, {{{1, 2}, 1}}), {2, 2, 20, 720});      // (t^2-1)^2, (t^2+1)^2
    check_row(rows, tt(0, {}, {{{2, 1}, 1}}), {4, 2, 24, 600});      // degree-2 reflection pairs
    CHECK(total_regular_elements(so4p, BigInt(5)) == 15376);         // (q^3 - 1)^2
}

TEST_CASE("even orthogonal minus table at (n, q) = (2, 5)") {
    GroupKind so4m(Family::SOeven, 2, -1);
    auto rows = rows_of(classify(so4m, BigInt(5)));
    REQUIRE(rows.size() == 5);
    check_row(rows, tt(2, {}, {}), {1, 2, 50, 312});
    // r = 1: single orbit, centralizer (q - eps*sigma)(q^d -+ 1): both 24 here
    check_row(rows, tt(1, {}, {{{1, 1}, 1}}), {2, 1, 24, 650});
    check_row(rows, tt(1, {{{1, 1}, 1}}, {}), {2, 1, 24, 650});
    // r = 0 types of sign -1
    check_row(rows, tt(0, {{{1, 1}, 1}}, {{{1, 1}, 1}}), {4, 2, 24, 650});
    check_row(rows, tt(0, {{{2, 1}, 1}}, {}), {6, 2, 26, 600});
    CHECK(total_regular_elements(so4m, BigInt(5)) == 15624);  // q^6 - 1
}

TEST_CASE("r = 1 even orthogonal centralizers depend on eps and the type sign") {
    // frozen from the same so_4^{+-}(F_5) enumeration: 16/24 and 36/24
    GroupKind plus(Family::SOeven, 2, +1), minus(Family::SOeven, 2, -1);
    TypeTriple pair_type = tt(1, {}, {{{1, 1}, 1}});   // sigma = +1
    TypeTriple even_type = tt(1, {{{1, 1}, 1}}, {});   // sigma = -1
    CHECK(centralizer_at(plus, pair_type, BigInt(5)) == 16);   // (q-1)(q-1)
    CHECK(centralizer_at(minus, pair_type, BigInt(5)) == 24);  // (q+1)(q-1)
    CHECK(centralizer_at(plus, even_type, BigInt(5)) == 36);   // (q+1)(q+1)
    CHECK(centralizer_at(minus, even_type, BigInt(5)) == 24);  // (q-1)(q+1)
}

TEST_CASE("admissibility rules") {
    GroupKind sp2(Family::Sp, 2), so5(Family::SOodd, 2);
    GroupKind plus(Family::SOeven, 2, +1), minus(Family::SOeven, 2, -1);
    for (const auto& tau : enumerate_types(2)) {
        CHECK(is_admissible(sp2, tau));
        CHECK(is_admissible(so5, tau));
        if (tau.singular()) {
            CHECK(is_admissible(plus, tau));
            CHECK(is_admissible(minus, tau));
        } else {
            CHECK(is_admissible(plus, tau) == (tau.sign() == +1));
            CHECK(is_admissible(minus, tau) == (tau.sign() == -1));
        }
    }
}

TEST_CASE("orbit splitting rules") {
    GroupKind sp2(Family::Sp, 2), so5(Family::SOodd, 2), plus(Family::SOeven, 2, +1);
    CHECK(orbits_per_poly(sp2, tt(1, {}, {{{1, 1}, 1}})) == 2);
    CHECK(orbits_per_poly(sp2, tt(0, {}, {{{1, 2}, 1}})) == 1);
    CHECK(orbits_per_poly(so5, tt(2, {}, {})) == 1);
    CHECK(orbits_per_poly(so5, tt(0, {{{2, 1}, 1}}, {})) == 1);
    CHECK(orbits_per_poly(plus, tt(0, {}, {{{2, 1}, 1}})) == 2);
    CHECK(orbits_per_poly(plus, tt(1, {}, {{{1, 1}, 1}})) == 1);
    CHECK(orbits_per_poly(plus, tt(2, {}, {})) == 2);
}

TEST_CASE("centralizer times orbit size is the group order, symbolically") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<GroupKind> kinds = {GroupKind(Family::Sp, n), GroupKind(Family::SOodd, n)};
        if (n >= 2) {
            kinds.emplace_back(Family::SOeven, n, +1);
            kinds.emplace_back(Family::SOeven, n, -1);
        }
        for (const auto& kind : kinds) {
            QPoly u = group_order_poly(kind);
            for (const auto& tau : enumerate_types(n)) {
                if (!is_admissible(kind, tau)) continue;
                CHECK(centralizer_poly(kind, tau) * orbit_size_poly(kind, tau) == u);
            }
        }
    }
}

TEST_CASE("hypothesis guards") {
    CHECK(thrown([] { classify(GroupKind(Family::SOeven, 2, +1), BigInt(3)); }) ==
          Errc::SmallFieldUnsupported);
    CHECK(thrown([] { classify(GroupKind(Family::Sp, 1), BigInt(4)); }) == Errc::NotOdd);
    CHECK(thrown([] { classify(GroupKind(Family::Sp, 1), BigInt(1)); }) == Errc::NotOdd);
    CHECK(thrown([] { GroupKind(Family::SOeven, 1, +1); }) == Errc::InvalidRank);
    CHECK(thrown([] { GroupKind(Family::Sp, 0); }) == Errc::InvalidRank);
    CHECK(thrown([] { GroupKind(Family::Sp, 1, +1); }) == Errc::InvalidRank);
    CHECK(thrown([] { GroupKind(Family::SOeven, 2); }) == Errc::InvalidRank);
}
