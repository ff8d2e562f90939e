#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "regzeta/oracle.hpp"
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

MatFq diag(const Fq& F, std::vector<int64_t> d) {
    MatFq m(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = F.from_int(d[i]);
    return m;
}

MatFq hyperbolic(int m) {
    MatFq J(2 * m);
    for (int i = 0; i < m; ++i) {
        J.at(2 * i, 2 * i + 1) = 1;
        J.at(2 * i + 1, 2 * i) = 1;
    }
    return J;
}

bool is_isometry(const Fq& F, const MatFq& J, const MatFq& g) {
    return mat_mul(F, mat_mul(F, mat_transpose(g), J), g) == J;
}

// Flattened, comparable summary of a scan, for determinism checks.
using FamilySummary =
    std::tuple<std::vector<uint32_t>, uint64_t, std::vector<uint64_t>, uint64_t>;

std::vector<FamilySummary> summarize(const ScanResult& scan) {
    std::vector<FamilySummary> out;
    for (const auto& fam : scan.families)
        out.emplace_back(fam.min_poly.c, fam.class_size, fam.orbit_sizes, fam.centralizer_order);
    return out;
}

}  // namespace

TEST_CASE("Witt index of explicit forms") {
    Fq F3(3), F5(5);
    for (int m = 1; m <= 3; ++m) CHECK(witt_index(F3, hyperbolic(m)) == m);
    CHECK(witt_index(F3, diag(F3, {1, 1})) == 0);   // -1 nonsquare mod 3: anisotropic
    CHECK(witt_index(F3, diag(F3, {1, 2})) == 1);   // -2 = 1: hyperbolic plane
    CHECK(witt_index(F5, diag(F5, {1, 1})) == 1);   // -1 = 4 = 2^2 mod 5
    CHECK(witt_index(F5, diag(F5, {1, 2})) == 0);
    CHECK(witt_index(F3, diag(F3, {1, 1, 1})) == 1);  // odd dimension: always (N-1)/2
    CHECK(witt_index(F5, diag(F5, {1, 1, 1, 1, 1})) == 2);
    CHECK(thrown([&] { witt_index(F3, diag(F3, {1, 0})); }) == Errc::DegenerateForm);
    CHECK(thrown([&] { witt_index(F3, MatFq(2)); }) == Errc::DegenerateForm);
}

TEST_CASE("Gram matrices realize the advertised Witt type") {
    for (auto [p, k] : std::vector<std::pair<uint64_t, uint64_t>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
        Fq F(p, k);
        for (int n = 1; n <= 3; ++n) {
            MatFq Jsp = gram_matrix(GroupKind(Family::Sp, n), F);
            CHECK(mat_add(F, Jsp, mat_transpose(Jsp)) == MatFq(2 * n));  // alternating
            CHECK(mat_det(F, Jsp) != 0);
            CHECK(witt_index(F, gram_matrix(GroupKind(Family::SOodd, n), F)) == n);
        }
        for (int n = 2; n <= 3; ++n) {
            CHECK(witt_index(F, gram_matrix(GroupKind(Family::SOeven, n, +1), F)) == n);
            CHECK(witt_index(F, gram_matrix(GroupKind(Family::SOeven, n, -1), F)) == n - 1);
        }
    }
}

TEST_CASE("Lie algebra bases have the right dimension and membership") {
    for (uint64_t p : {3ull, 5ull}) {
        Fq F(p);
        std::vector<std::pair<GroupKind, int>> want = {
            {GroupKind(Family::Sp, 1), 3},        {GroupKind(Family::Sp, 2), 10},
            {GroupKind(Family::SOodd, 1), 3},     {GroupKind(Family::SOodd, 2), 10},
            {GroupKind(Family::SOeven, 2, +1), 6}, {GroupKind(Family::SOeven, 2, -1), 6}};
        for (const auto& [kind, dim] : want) {
            MatFq J = gram_matrix(kind, F);
            auto basis = lie_basis(kind, F, J);
            REQUIRE(static_cast<int>(basis.size()) == dim);
            CHECK(dim == kind.dim_g());
            for (const auto& b : basis) CHECK(in_lie_algebra(F, J, b));
            CHECK_FALSE(in_lie_algebra(F, J, MatFq::identity(kind.N())));
        }
    }
}

TEST_CASE("regular nilpotent fixtures") {
    for (uint64_t p : {3ull, 5ull}) {
        Fq F(p);
        std::vector<GroupKind> kinds = {GroupKind(Family::Sp, 1),         GroupKind(Family::Sp, 2),
                                        GroupKind(Family::SOodd, 1),      GroupKind(Family::SOodd, 2),
                                        GroupKind(Family::SOeven, 2, +1), GroupKind(Family::SOeven, 2, -1),
                                        GroupKind(Family::SOeven, 3, +1), GroupKind(Family::SOeven, 3, -1)};
        for (const auto& kind : kinds) {
            auto [x, J] = nilpotent_fixture_for(kind, F);
            CHECK(in_lie_algebra(F, J, x));
            int block = kind.fam == Family::SOeven ? kind.N() - 1 : kind.N();
            CHECK(min_poly(F, x) == Poly::t_pow(static_cast<size_t>(block)));
            if (kind.fam != Family::Sp)
                CHECK(witt_index(F, J) == (kind.eps == -1 ? kind.n - 1 : kind.n));
            auto basis = lie_basis(kind, F, J);
            CHECK(is_regular_bruteforce(F, basis, x, kind.dim_g() - kind.n));
            CHECK_FALSE(is_regular_bruteforce(F, basis, MatFq(kind.N()), kind.dim_g() - kind.n));
        }
    }
}

TEST_CASE("corner-entry choice for the even fixture depends on the field") {
    // With eta = 1 the corner block is a square, yet the Witt index of the
    // whole form still depends on (-1)^n: over F_3 with n = 3 it drops to 2.
    Fq F3(3), F5(5);
    CHECK(witt_index(F3, nilpotent_fixture(GroupKind(Family::SOeven, 3, +1), F3, 1).second) == 2);
    CHECK(witt_index(F5, nilpotent_fixture(GroupKind(Family::SOeven, 3, +1), F5, 1).second) == 3);
    CHECK(witt_index(F3, nilpotent_fixture(GroupKind(Family::SOeven, 2, +1), F3, 1).second) == 2);
}

TEST_CASE("non-regular elements are rejected by the bracket-rank test") {
    Fq F(5);
    GroupKind sp2(Family::Sp, 2);
    MatFq J = gram_matrix(sp2, F);
    auto basis = lie_basis(sp2, F, J);
    MatFq x = diag(F, {1, 1, -1, -1});  // centralizer gl_2: codimension too big
    REQUIRE(in_lie_algebra(F, J, x));
    CHECK_FALSE(is_regular_bruteforce(F, basis, x, sp2.dim_g() - sp2.n));
    MatFq y = diag(F, {1, 2, -2, -1});  // distinct eigenvalues: regular semisimple
    REQUIRE(in_lie_algebra(F, J, y));
    CHECK(is_regular_bruteforce(F, basis, y, sp2.dim_g() - sp2.n));
}

TEST_CASE("minimal polynomial regularity rule") {
    Fq F(3);
    CHECK(minpoly_predicate(GroupKind(Family::Sp, 1), F, Poly::t_pow(2)));
    CHECK(minpoly_predicate(GroupKind(Family::Sp, 1), F, Poly({1, 0, 1})));       // t^2 + 1
    CHECK_FALSE(minpoly_predicate(GroupKind(Family::Sp, 1), F, Poly({0, 1})));    // wrong degree
    CHECK_FALSE(minpoly_predicate(GroupKind(Family::Sp, 1), F, Poly({0, 1, 1})));  // not even
    CHECK(minpoly_predicate(GroupKind(Family::SOodd, 1), F, Poly({0, 1, 0, 1}))); // t^3 + t
    CHECK_FALSE(minpoly_predicate(GroupKind(Family::SOodd, 1), F, Poly::t_pow(2)));
    CHECK(minpoly_predicate(GroupKind(Family::SOeven, 2, +1), F, Poly::t_pow(4)));
    CHECK(minpoly_predicate(GroupKind(Family::SOeven, 2, +1), F, Poly::t_pow(3)));
    CHECK_FALSE(minpoly_predicate(GroupKind(Family::SOeven, 2, +1), F, Poly({0, 0, 0, 1, 1})));
    CHECK_FALSE(minpoly_predicate(GroupKind(Family::SOeven, 2, +1), F, Poly::t_pow(2)));
}

TEST_CASE("Cayley transform lands in the special isometry group") {
    for (const auto& [kind, p] : std::vector<std::pair<GroupKind, uint64_t>>{
             {GroupKind(Family::Sp, 1), 5},
             {GroupKind(Family::SOodd, 1), 5},
             {GroupKind(Family::SOeven, 2, +1), 5},
             {GroupKind(Family::SOeven, 2, -1), 7}}) {
        Fq F(p);
        MatFq J = gram_matrix(kind, F);
        int hits = 0;
        for (const auto& b : lie_basis(kind, F, J))
            if (auto g = cayley(F, b)) {
                ++hits;
                CHECK(is_isometry(F, J, *g));
                CHECK(mat_det(F, *g) == 1);
            }
        CHECK(hits > 0);
    }
    // 1 + x singular: no image
    Fq F3(3);
    MatFq x(2);
    x.at(0, 1) = 1;
    x.at(1, 0) = 1;
    REQUIRE(in_lie_algebra(F3, gram_matrix(GroupKind(Family::Sp, 1), F3), x));
    CHECK_FALSE(cayley(F3, x).has_value());
}

TEST_CASE("group tables by exhaustive filter") {
    std::vector<std::tuple<GroupKind, uint64_t, uint64_t>> cases = {
        {GroupKind(Family::Sp, 1), 3, 24},
        {GroupKind(Family::Sp, 1), 5, 120},
        {GroupKind(Family::SOodd, 1), 3, 24},
        {GroupKind(Family::SOeven, 2, +1), 3, 576},
        {GroupKind(Family::SOeven, 2, -1), 3, 720},
    };
    for (const auto& [kind, p, order] : cases) {
        Fq F(p);
        GroupTable table = group_elements(kind, F);
        CHECK(table.strategy == "filter");
        CHECK(table.gens.empty());
        CHECK(table.elems.size() == order);
        CHECK(BigInt(table.elems.size()) == group_order_at(kind, BigInt(static_cast<long>(p))));
        MatFq J = gram_matrix(kind, F);
        CHECK(is_isometry(F, J, table.elems.front()));
        CHECK(is_isometry(F, J, table.elems.back()));
    }
}

TEST_CASE("Cayley closure reproduces the filtered group") {
    // Budget small enough to rule out the 5^4-candidate filter, large enough
    // for everything else.
    OracleBudget bfs_budget{200, 2'000'000};
    Fq F5(5);
    GroupKind sp1(Family::Sp, 1);
    GroupTable via_bfs = group_elements(sp1, F5, bfs_budget);
    CHECK(via_bfs.strategy == "cayley-bfs");
    CHECK_FALSE(via_bfs.gens.empty());
    REQUIRE(via_bfs.elems.size() == 120);

    GroupTable via_filter = group_elements(sp1, F5);
    REQUIRE(via_filter.elems.size() == 120);
    auto by_key = [](const MatFq& a, const MatFq& b) { return mat_key(a) < mat_key(b); };
    std::sort(via_filter.elems.begin(), via_filter.elems.end(), by_key);
    std::sort(via_bfs.elems.begin(), via_bfs.elems.end(), by_key);
    CHECK(via_bfs.elems == via_filter.elems);

    // Same cross-check on an orthogonal group, where the closure must cover
    // both spinor-norm classes.
    Fq F3(3);
    GroupKind so1(Family::SOodd, 1);
    GroupTable odd_bfs = group_elements(so1, F3, OracleBudget{100, 2'000'000});
    CHECK(odd_bfs.strategy == "cayley-bfs");
    GroupTable odd_filter = group_elements(so1, F3);
    REQUIRE(odd_bfs.elems.size() == odd_filter.elems.size());
    std::sort(odd_filter.elems.begin(), odd_filter.elems.end(), by_key);
    std::sort(odd_bfs.elems.begin(), odd_bfs.elems.end(), by_key);
    CHECK(odd_bfs.elems == odd_filter.elems);
}

TEST_CASE("empirical scan of the rank-one symplectic algebra") {
    Fq F(3);
    GroupKind sp1(Family::Sp, 1);
    GroupTable table = group_elements(sp1, F);
    ScanResult scan = scan_regular_orbits(sp1, F, table);
    CHECK(scan.points_scanned == 27);
    CHECK(scan.regular_count == 26);
    CHECK(scan.predicate_mismatches == 0);
    REQUIRE(scan.families.size() == 3);

    CHECK(scan.families[0].min_poly == Poly::t_pow(2));
    CHECK(scan.families[0].tau == tt(1, {}, {}));
    CHECK(scan.families[0].class_size == 8);
    CHECK(scan.families[0].orbit_sizes == std::vector<uint64_t>{4, 4});
    CHECK(scan.families[0].centralizer_order == 6);

    CHECK(scan.families[1].min_poly == Poly({1, 0, 1}));  // t^2 + 1
    CHECK(scan.families[1].tau == tt(0, {{{1, 1}, 1}}, {}));
    CHECK(scan.families[1].orbit_sizes == std::vector<uint64_t>{6});
    CHECK(scan.families[1].centralizer_order == 4);

    CHECK(scan.families[2].min_poly == Poly({2, 0, 1}));  // t^2 - 1
    CHECK(scan.families[2].tau == tt(0, {}, {{{1, 1}, 1}}));
    CHECK(scan.families[2].orbit_sizes == std::vector<uint64_t>{12});
    CHECK(scan.families[2].centralizer_order == 2);
}

TEST_CASE("empirical scan of the rank-one odd orthogonal algebra") {
    Fq F(3);
    GroupKind so1(Family::SOodd, 1);
    GroupTable table = group_elements(so1, F);
    ScanResult scan = scan_regular_orbits(so1, F, table);
    CHECK(scan.regular_count == 26);
    CHECK(scan.predicate_mismatches == 0);
    REQUIRE(scan.families.size() == 3);
    CHECK(scan.families[0].min_poly == Poly::t_pow(3));
    CHECK(scan.families[0].orbit_sizes == std::vector<uint64_t>{8});
    CHECK(scan.families[0].centralizer_order == 3);
    CHECK(scan.families[1].min_poly == Poly({0, 1, 0, 1}));  // t(t^2 + 1)
    CHECK(scan.families[1].orbit_sizes == std::vector<uint64_t>{6});
    CHECK(scan.families[1].centralizer_order == 4);
    CHECK(scan.families[2].min_poly == Poly({0, 2, 0, 1}));  // t(t^2 - 1)
    CHECK(scan.families[2].orbit_sizes == std::vector<uint64_t>{12});
    CHECK(scan.families[2].centralizer_order == 2);
}

TEST_CASE("worker count does not change scan results") {
    Fq F(3);
    GroupKind sp1(Family::Sp, 1);
    GroupTable table = group_elements(sp1, F);

    REQUIRE(setenv("REGZETA_THREADS", "1", 1) == 0);
    CHECK(thread_count() == 1);
    auto single = summarize(scan_regular_orbits(sp1, F, table));
    REQUIRE(setenv("REGZETA_THREADS", "3", 1) == 0);
    CHECK(thread_count() == 3);
    auto triple = summarize(scan_regular_orbits(sp1, F, table));
    REQUIRE(unsetenv("REGZETA_THREADS") == 0);

    CHECK(single == triple);
}

TEST_CASE("matrix verification agrees with the classification") {
    Fq F3(3), F5(5);
    CompareReport sp = compare_report(GroupKind(Family::Sp, 1), F3);
    CHECK(sp.ok());
    CHECK(sp.strategy == "filter");
    CHECK(sp.regular_count == 26);
    CHECK(sp.minpoly_classes == 3);
    CHECK(sp.predicate_mismatches == 0);
    CHECK(sp.group_order == 24);

    CHECK(compare_report(GroupKind(Family::SOodd, 1), F3).ok());

    CompareReport bfs = compare_report(GroupKind(Family::Sp, 1), F5, OracleBudget{200, 2'000'000});
    CHECK(bfs.ok());
    CHECK(bfs.strategy == "cayley-bfs");
    CHECK(bfs.group_order == 120);
}

TEST_CASE("matrix verification resolves the even-orthogonal sign convention") {
    Fq F5(5);
    CompareReport plus = compare_report(GroupKind(Family::SOeven, 2, +1), F5);
    CHECK(plus.ok());
    CHECK(plus.strategy == "cayley-bfs");
    CHECK(plus.group_order == 14400);
    CHECK(plus.regular_count == 15376);

    CompareReport minus = compare_report(GroupKind(Family::SOeven, 2, -1), F5);
    CHECK(minus.ok());
    CHECK(minus.group_order == 15600);
    CHECK(minus.regular_count == 15624);
}

TEST_CASE("budget exhaustion is reported, not silently truncated") {
    Fq F5(5);
    CHECK(thrown([&] { group_elements(GroupKind(Family::Sp, 2), F5); }) == Errc::CapExceeded);
    CHECK(thrown([&] { compare_report(GroupKind(Family::Sp, 2), F5); }) == Errc::CapExceeded);
    // Sweep cap: group fits, but the q^dim point scan does not.
    Fq F3(3);
    GroupTable table = group_elements(GroupKind(Family::Sp, 1), F3);
    CHECK(thrown([&] {
              scan_regular_orbits(GroupKind(Family::Sp, 1), F3, table, OracleBudget{20, 100});
          }) == Errc::CapExceeded);
}
