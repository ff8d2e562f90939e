#include "regzeta/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>
#include <unordered_set>

#include "regzeta/error.hpp"
#include "regzeta/typecomb.hpp"

namespace regzeta {

namespace {

BigInt big_pow(uint64_t base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

/* g^T J g == J, checked column by column so that a random non-isometry is
   rejected after roughly one column's work. */
bool preserves_form(const Fq& F, const MatFq& g, const MatFq& J) {
    int N = g.n;
    std::vector<uint32_t> v(static_cast<size_t>(N));
    for (int c = 0; c < N; ++c) {
        for (int i = 0; i < N; ++i) {
            uint32_t s = 0;
            for (int k = 0; k < N; ++k) s = F.add(s, F.mul(J.at(i, k), g.at(k, c)));
            v[static_cast<size_t>(i)] = s;
        }
        for (int r = 0; r < N; ++r) {
            uint32_t s = 0;
            for (int i = 0; i < N; ++i) s = F.add(s, F.mul(g.at(i, r), v[static_cast<size_t>(i)]));
            if (s != J.at(r, c)) return false;
        }
    }
    return true;
}

GroupTable filter_group(const GroupKind& kind, const Fq& F, const MatFq& J,
                        uint64_t total_candidates) {
    int N = kind.N();
    size_t cells = static_cast<size_t>(N) * N;
    uint64_t q = F.q();

    unsigned nt = thread_count();
    uint64_t chunk = (total_candidates + nt - 1) / nt;
    std::vector<std::vector<MatFq>> found(nt);
    std::vector<std::thread> workers;
    workers.reserve(nt);
    for (unsigned w = 0; w < nt; ++w) {
        workers.emplace_back([&, w]() {
            uint64_t lo = static_cast<uint64_t>(w) * chunk;
            uint64_t hi = std::min(total_candidates, lo + chunk);
            if (lo >= hi) return;
            MatFq g(N);
            uint64_t idx = lo;
            for (size_t i = 0; i < cells; ++i) {
                g.a[i] = static_cast<uint32_t>(idx % q);
                idx /= q;
            }
            for (uint64_t cur = lo; cur < hi; ++cur) {
                if (preserves_form(F, g, J) && mat_det(F, g) == 1) found[w].push_back(g);
                for (size_t i = 0; i < cells; ++i) {
                    if (++g.a[i] < q) break;
                    g.a[i] = 0;
                }
            }
        });
    }
    for (auto& t : workers) t.join();

    GroupTable T;
    T.strategy = "filter";
    size_t n_total = 0;
    for (const auto& v : found) n_total += v.size();
    T.elems.reserve(n_total);
    for (auto& v : found)
        for (auto& m : v) T.elems.push_back(std::move(m));
    return T;
}

GroupTable cayley_bfs_group(const GroupKind& kind, const Fq& F, const MatFq& J,
                            const OracleBudget& budget) {
    BigInt expect = group_order_at(kind, BigInt(F.q()));
    if (expect > budget.group_limit)
        fail(Errc::CapExceeded, "group order " + expect.str() + " exceeds the closure budget " +
                                    std::to_string(budget.group_limit));
    uint64_t target = expect.convert_to<uint64_t>();

    int N = kind.N();
    auto basis = lie_basis(kind, F, J);

    /* Deterministic generator sampling: a fixed 64-bit LCG drives random
       Lie-algebra points whose Cayley transforms seed the closure.  Lex-first
       points generate far too little (they can close on a tiny subgroup), so
       spread samples are essential. */
    uint64_t state = 12345;
    auto draw_gen = [&]() -> std::optional<MatFq> {
        MatFq x(N);
        bool nonzero = false;
        for (const auto& b : basis) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            uint32_t coeff = static_cast<uint32_t>((state >> 33) % F.q());
            if (coeff) {
                x = mat_add(F, x, mat_scal(F, coeff, b));
                nonzero = true;
            }
        }
        if (!nonzero) return std::nullopt;
        auto g = cayley(F, x);
        if (g && (!preserves_form(F, *g, J) || mat_det(F, *g) != 1))
            fail(Errc::Internal, "cayley image is not a special isometry");
        return g;
    };

    std::vector<MatFq> gens;
    size_t pool = 4;
    while (true) {
        while (gens.size() < pool) {
            auto g = draw_gen();
            if (g) gens.push_back(std::move(*g));
        }

        std::unordered_set<MatKey, MatKeyHash> seen;
        seen.reserve(target * 2);
        std::vector<MatFq> elems;
        elems.reserve(target);
        MatFq I = MatFq::identity(N);
        seen.insert(mat_key(I));
        elems.push_back(I);
        for (size_t head = 0; head < elems.size(); ++head) {
            MatFq cur = elems[head];  // copy: elems may reallocate
            for (const auto& g : gens) {
                MatFq nxt = mat_mul(F, cur, g);
                if (seen.insert(mat_key(nxt)).second) {
                    elems.push_back(std::move(nxt));
                    if (elems.size() > target)
                        fail(Errc::Internal, "closure exceeds the group-order polynomial");
                }
            }
        }
        if (elems.size() == target) {
            std::sort(elems.begin(), elems.end(), [](const MatFq& a, const MatFq& b) {
                return mat_key(a) < mat_key(b);
            });
            GroupTable T;
            T.elems = std::move(elems);
            T.gens = std::move(gens);
            T.strategy = "cayley-bfs";
            return T;
        }
        if (pool >= 64)
            fail(Errc::Internal, "cayley closure stalled at " + std::to_string(elems.size()) +
                                     " of " + std::to_string(target));
        pool += 2;
    }
}

/* Type of a regular minimal polynomial, via the family's key polynomial. */
TypeTriple tau_from_minpoly(const GroupKind& kind, const Fq& F, const Poly& m) {
    switch (kind.fam) {
        case Family::Sp:
            return type_of(F, m);
        case Family::SOodd: {
            auto [quot, rem] = poly_divrem(F, m, Poly::t());
            if (!rem.is_zero()) fail(Errc::Internal, "odd minimal polynomial not divisible by t");
            return type_of(F, quot);
        }
        case Family::SOeven:
            if (m.degree() == kind.N()) return type_of(F, m);
            return type_of(F, poly_mul(F, Poly::t(), m));
    }
    fail(Errc::Internal, "unreachable family");
}

}  // namespace

unsigned thread_count() {
    if (const char* env = std::getenv("REGZETA_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v <= 64) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return std::min(hw, 8u);
}

MatFq gram_matrix(const GroupKind& kind, const Fq& F) {
    int N = kind.N();
    MatFq J(N);
    switch (kind.fam) {
        case Family::Sp:
            for (int i = 0; i < N; ++i) J.at(i, N - 1 - i) = (i % 2 == 0) ? 1u : F.neg(1);
            break;
        case Family::SOodd:
            for (int b = 0; b < kind.n; ++b) {
                J.at(2 * b, 2 * b + 1) = 1;
                J.at(2 * b + 1, 2 * b) = 1;
            }
            J.at(N - 1, N - 1) = 1;
            break;
        case Family::SOeven: {
            int hyper = (kind.eps > 0) ? kind.n : kind.n - 1;
            for (int b = 0; b < hyper; ++b) {
                J.at(2 * b, 2 * b + 1) = 1;
                J.at(2 * b + 1, 2 * b) = 1;
            }
            if (kind.eps < 0) {
                /* x^2 - delta y^2 with delta a nonsquare is anisotropic for
                   every odd q; diag(1, delta) is not (it is isotropic when
                   -delta happens to be a square, e.g. q = 3 (mod 4)). */
                J.at(N - 2, N - 2) = 1;
                J.at(N - 1, N - 1) = F.neg(F.least_nonsquare());
            }
            break;
        }
    }
    return J;
}

std::vector<MatFq> lie_basis(const GroupKind& kind, const Fq& F, const MatFq& form) {
    int N = form.n;
    size_t width = static_cast<size_t>(N) * N;
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(width);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            // (x^T J + J x)_{a,b} = sum_k x_{k,a} J_{k,b} + J_{a,k} x_{k,b}
            std::vector<uint32_t> row(width, 0);
            for (int k = 0; k < N; ++k) {
                size_t ka = static_cast<size_t>(k) * N + a;
                size_t kb = static_cast<size_t>(k) * N + b;
                row[ka] = F.add(row[ka], form.at(k, b));
                row[kb] = F.add(row[kb], form.at(a, k));
            }
            rows.push_back(std::move(row));
        }
    auto vecs = null_space(F, std::move(rows), width);
    if (static_cast<int>(vecs.size()) != kind.dim_g())
        fail(Errc::Internal, "lie algebra dimension " + std::to_string(vecs.size()) +
                                 " != " + std::to_string(kind.dim_g()));
    std::vector<MatFq> basis;
    basis.reserve(vecs.size());
    for (auto& v : vecs) {
        MatFq m(N);
        m.a.assign(v.begin(), v.end());
        basis.push_back(std::move(m));
    }
    return basis;
}

bool in_lie_algebra(const Fq& F, const MatFq& form, const MatFq& x) {
    return mat_is_zero(mat_add(F, mat_mul(F, mat_transpose(x), form), mat_mul(F, form, x)));
}

std::pair<MatFq, MatFq> nilpotent_fixture(const GroupKind& kind, const Fq& F, uint32_t eta) {
    int N = kind.N();
    MatFq x(N), form(N);
    if (kind.fam == Family::SOeven) {
        /* Jordan block on the first N-1 coordinates plus a decoupled line:
           the regular nilpotent of so_2n.  Form: antidiagonal (-1)^i on the
           block, corner eta on the line. */
        for (int i = 0; i + 2 < N; ++i) x.at(i, i + 1) = 1;
        for (int i = 0; i < N - 1; ++i) form.at(i, N - 2 - i) = (i % 2 == 0) ? 1u : F.neg(1);
        form.at(N - 1, N - 1) = eta;
    } else {
        for (int i = 0; i + 1 < N; ++i) x.at(i, i + 1) = 1;
        for (int i = 0; i < N; ++i) form.at(i, N - 1 - i) = (i % 2 == 0) ? 1u : F.neg(1);
    }
    if (!in_lie_algebra(F, form, x))
        fail(Errc::Internal, "nilpotent fixture escapes its lie algebra");
    return {x, form};
}

std::pair<MatFq, MatFq> nilpotent_fixture_for(const GroupKind& kind, const Fq& F) {
    if (kind.fam != Family::SOeven) return nilpotent_fixture(kind, F, 1);
    int want = (kind.eps > 0) ? kind.n : kind.n - 1;
    for (uint32_t eta : {1u, F.least_nonsquare()}) {
        auto fx = nilpotent_fixture(kind, F, eta);
        if (witt_index(F, fx.second) == want) return fx;
    }
    fail(Errc::Internal, "no corner value realizes the requested Witt index");
}

int witt_index(const Fq& F, const MatFq& sym) {
    int N = sym.n;
    MatFq A = sym;
    std::vector<uint32_t> diag;
    diag.reserve(static_cast<size_t>(N));
    for (int step = 0; step < N; ++step) {
        int piv = -1;
        for (int i = step; i < N; ++i)
            if (A.at(i, i) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            // all remaining diagonal entries vanish; find an off-diagonal one
            int oi = -1, oj = -1;
            for (int i = step; i < N && oi < 0; ++i)
                for (int j = i + 1; j < N; ++j)
                    if (A.at(i, j) != 0) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi < 0) fail(Errc::DegenerateForm, "witt index of a degenerate form");
            // congruence by (row oi += row oj): diagonal entry becomes 2 A_{oi,oj} != 0
            for (int j2 = 0; j2 < N; ++j2) A.at(oi, j2) = F.add(A.at(oi, j2), A.at(oj, j2));
            for (int i2 = 0; i2 < N; ++i2) A.at(i2, oi) = F.add(A.at(i2, oi), A.at(i2, oj));
            piv = oi;
        }
        if (piv != step) {
            for (int j2 = 0; j2 < N; ++j2) std::swap(A.at(piv, j2), A.at(step, j2));
            for (int i2 = 0; i2 < N; ++i2) std::swap(A.at(i2, piv), A.at(i2, step));
        }
        uint32_t d = A.at(step, step);
        uint32_t dinv = F.inv(d);
        for (int i = step + 1; i < N; ++i) {
            uint32_t f = F.mul(A.at(i, step), dinv);
            if (!f) continue;
            for (int j2 = 0; j2 < N; ++j2) A.at(i, j2) = F.sub(A.at(i, j2), F.mul(f, A.at(step, j2)));
            for (int i2 = 0; i2 < N; ++i2) A.at(i2, i) = F.sub(A.at(i2, i), F.mul(f, A.at(i2, step)));
        }
        diag.push_back(d);
    }
    if (N % 2 == 1) return N / 2;
    /* dim 2m: hyperbolic (index m) iff the discriminant is the square class
       of (-1)^m, else index m - 1. */
    int m = N / 2;
    uint32_t disc = 1;
    for (uint32_t d : diag) disc = F.mul(disc, d);
    if (m % 2 == 1) disc = F.neg(disc);
    return F.is_square(disc) ? m : m - 1;
}

bool is_regular_bruteforce(const Fq& F, const std::vector<MatFq>& basis, const MatFq& x,
                           int rank_needed) {
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(basis.size());
    for (const auto& b : basis) {
        MatFq br = mat_sub(F, mat_mul(F, x, b), mat_mul(F, b, x));
        rows.emplace_back(br.a.begin(), br.a.end());
    }
    return row_rank(F, std::move(rows)) == rank_needed;
}

bool minpoly_predicate(const GroupKind& kind, const Fq& F, const Poly& m) {
    int d = m.degree();
    switch (kind.fam) {
        case Family::Sp:
            return d == 2 * kind.n && poly_is_even(F, m);
        case Family::SOodd:
            return d == 2 * kind.n + 1 && poly_is_odd(F, m);
        case Family::SOeven:
            return (d == 2 * kind.n && poly_is_even(F, m)) ||
                   (d == 2 * kind.n - 1 && poly_is_odd(F, m));
    }
    return false;
}

std::optional<MatFq> cayley(const Fq& F, const MatFq& x) {
    MatFq I = MatFq::identity(x.n);
    auto inv = mat_inverse(F, mat_add(F, I, x));
    if (!inv) return std::nullopt;
    return mat_mul(F, mat_sub(F, I, x), *inv);
}

GroupTable group_elements(const GroupKind& kind, const Fq& F, const OracleBudget& budget) {
    MatFq J = gram_matrix(kind, F);
    int N = kind.N();
    BigInt candidates = big_pow(F.q(), N * N);
    if (candidates <= budget.scan_limit)
        return filter_group(kind, F, J, candidates.convert_to<uint64_t>());
    BigInt expect = group_order_at(kind, BigInt(F.q()));
    if (expect <= budget.group_limit) return cayley_bfs_group(kind, F, J, budget);
    fail(Errc::CapExceeded, "q^(N^2) = " + candidates.str() + " exceeds the scan budget " +
                                std::to_string(budget.scan_limit) + " and the group order " +
                                expect.str() + " exceeds the closure budget " +
                                std::to_string(budget.group_limit));
}

ScanResult scan_regular_orbits(const GroupKind& kind, const Fq& F, const GroupTable& G,
                               const OracleBudget& budget) {
    int N = kind.N();
    MatFq J = gram_matrix(kind, F);
    auto basis = lie_basis(kind, F, J);
    int dim = kind.dim_g();
    int rank_needed = dim - kind.n;
    uint64_t q = F.q();

    BigInt pts = big_pow(q, dim);
    if (pts > budget.scan_limit)
        fail(Errc::CapExceeded, "q^dim = " + pts.str() + " exceeds the scan budget " +
                                    std::to_string(budget.scan_limit));
    uint64_t total = pts.convert_to<uint64_t>();

    struct Local {
        std::map<Poly, std::vector<MatFq>, PolyLess> classes;
        uint64_t regular = 0;
        uint64_t mismatches = 0;
    };
    unsigned nt = thread_count();
    uint64_t chunk = (total + nt - 1) / nt;
    std::vector<Local> locals(nt);
    std::vector<std::thread> workers;
    workers.reserve(nt);
    for (unsigned w = 0; w < nt; ++w) {
        workers.emplace_back([&, w]() {
            uint64_t lo = static_cast<uint64_t>(w) * chunk;
            uint64_t hi = std::min(total, lo + chunk);
            if (lo >= hi) return;
            Local& L = locals[w];
            std::vector<uint32_t> digits(static_cast<size_t>(dim), 0);
            uint64_t idx = lo;
            for (auto& d : digits) {
                d = static_cast<uint32_t>(idx % q);
                idx /= q;
            }
            for (uint64_t cur = lo; cur < hi; ++cur) {
                MatFq x(N);
                for (size_t i = 0; i < digits.size(); ++i)
                    if (digits[i]) x = mat_add(F, x, mat_scal(F, digits[i], basis[i]));
                bool reg = is_regular_bruteforce(F, basis, x, rank_needed);
                Poly m = min_poly(F, x);
                if (reg != minpoly_predicate(kind, F, m)) ++L.mismatches;
                if (reg) {
                    ++L.regular;
                    L.classes[m].push_back(std::move(x));
                }
                for (auto& d : digits) {
                    if (++d < q) break;
                    d = 0;
                }
            }
        });
    }
    for (auto& t : workers) t.join();

    ScanResult R;
    R.points_scanned = total;
    std::map<Poly, std::vector<MatFq>, PolyLess> classes;
    for (auto& L : locals) {
        R.regular_count += L.regular;
        R.predicate_mismatches += L.mismatches;
        for (auto& [m, v] : L.classes) {
            auto& dst = classes[m];
            dst.insert(dst.end(), std::make_move_iterator(v.begin()),
                       std::make_move_iterator(v.end()));
        }
    }

    // orbit partition by direct conjugation sweeps over the whole group
    std::vector<MatFq> ginv;
    ginv.reserve(G.elems.size());
    for (const auto& g : G.elems) {
        auto iv = mat_inverse(F, g);
        if (!iv) fail(Errc::Internal, "group table holds a singular matrix");
        ginv.push_back(std::move(*iv));
    }

    for (auto& [m, members] : classes) {
        EmpiricalFamily fam;
        fam.min_poly = m;
        fam.class_size = members.size();
        if (minpoly_predicate(kind, F, m)) {
            fam.tau = tau_from_minpoly(kind, F, m);
        } else {
            fam.tau.r = -1;  // sentinel: regular element outside the predicate
        }
        std::unordered_set<MatKey, MatKeyHash> assigned;
        assigned.reserve(members.size() * 2);
        for (const auto& x0 : members) {
            if (assigned.count(mat_key(x0))) continue;
            uint64_t centralizer = 0;
            std::unordered_set<MatKey, MatKeyHash> orbit;
            for (size_t gi = 0; gi < G.elems.size(); ++gi) {
                MatFq y = mat_mul(F, mat_mul(F, G.elems[gi], x0), ginv[gi]);
                if (y == x0) ++centralizer;
                orbit.insert(mat_key(y));
            }
            if (centralizer * orbit.size() != G.elems.size())
                fail(Errc::Internal, "orbit-stabilizer identity fails: table is not a group");
            fam.orbit_sizes.push_back(orbit.size());
            if (fam.centralizer_order == 0) fam.centralizer_order = centralizer;
            for (const auto& k : orbit) assigned.insert(k);
        }
        std::sort(fam.orbit_sizes.begin(), fam.orbit_sizes.end());
        R.families.push_back(std::move(fam));
    }
    return R;
}

CompareReport compare_report(const GroupKind& kind, const Fq& F, const OracleBudget& budget) {
    CompareReport rep;
    rep.kind = kind;
    rep.q = F.q();

    auto table = group_elements(kind, F, budget);
    rep.strategy = table.strategy;
    rep.group_order = table.elems.size();
    BigInt formula_order = group_order_at(kind, BigInt(F.q()));
    if (rep.group_order != formula_order)
        rep.diffs.push_back("group order: enumerated " + rep.group_order.str() + ", formula " +
                            formula_order.str());

    auto scan = scan_regular_orbits(kind, F, table, budget);
    rep.regular_count = scan.regular_count;
    rep.minpoly_classes = scan.families.size();
    rep.predicate_mismatches = scan.predicate_mismatches;
    if (scan.predicate_mismatches)
        rep.diffs.push_back("regularity predicate: " + std::to_string(scan.predicate_mismatches) +
                            " disagreements with the bruteforce rank test");

    auto predicted = classify(kind, BigInt(F.q()));
    std::map<TypeTriple, const OrbitFamily*> by_tau;
    for (const auto& row : predicted) by_tau[row.tau] = &row;

    std::map<TypeTriple, uint64_t> polys_seen;
    for (const auto& fam : scan.families) {
        std::string label = "minpoly " + poly_str(F, fam.min_poly) + " (type " + fam.tau.str() + ")";
        auto it = by_tau.find(fam.tau);
        if (it == by_tau.end()) {
            rep.diffs.push_back(label + ": type not in the predicted table");
            continue;
        }
        ++polys_seen[fam.tau];
        const OrbitFamily& row = *it->second;
        if (static_cast<int>(fam.orbit_sizes.size()) != row.orbits_per_poly)
            rep.diffs.push_back(label + ": " + std::to_string(fam.orbit_sizes.size()) +
                                " orbits, predicted " + std::to_string(row.orbits_per_poly));
        for (uint64_t sz : fam.orbit_sizes)
            if (BigInt(sz) != row.orbit_size)
                rep.diffs.push_back(label + ": orbit size " + std::to_string(sz) + ", predicted " +
                                    row.orbit_size.str());
        if (BigInt(fam.centralizer_order) != row.centralizer_order)
            rep.diffs.push_back(label + ": centralizer order " +
                                std::to_string(fam.centralizer_order) + ", predicted " +
                                row.centralizer_order.str());
    }
    for (const auto& row : predicted) {
        uint64_t seen = 0;
        if (auto it = polys_seen.find(row.tau); it != polys_seen.end()) seen = it->second;
        if (BigInt(seen) != row.num_polys)
            rep.diffs.push_back("type " + row.tau.str() + ": " + std::to_string(seen) +
                                " minimal polynomials, predicted " + row.num_polys.str());
    }

    BigInt census = total_regular_elements(kind, BigInt(F.q()));
    if (BigInt(scan.regular_count) != census)
        rep.diffs.push_back("census: " + std::to_string(scan.regular_count) +
                            " regular elements, predicted " + census.str());
    return rep;
}

}  // namespace regzeta
