#include "regzeta/zeta.hpp"

#include <algorithm>
#include <numeric>

namespace regzeta {

void DirichletPoly::add_term(const BigInt& m, const BigInt& a) {
    terms.push_back({m, a});
}

void DirichletPoly::normalize() {
    std::sort(terms.begin(), terms.end(),
              [](const DirichletTerm& x, const DirichletTerm& y) { return x.m < y.m; });
    std::vector<DirichletTerm> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().m == t.m)
            merged.back().a += t.a;
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](const DirichletTerm& t) { return t.a == 0; });
    terms = std::move(merged);
}

BigInt DirichletPoly::total_weighted() const {
    BigInt s = 0;
    for (auto& t : terms) s += t.a * t.m;
    return s;
}

DirichletPoly dirichlet_from_families(const GroupKind& kind, const BigInt& q) {
    DirichletPoly D;
    for (auto& fam : classify(kind, q))
        D.add_term(fam.orbit_size, fam.num_polys * fam.orbits_per_poly * fam.centralizer_order);
    D.normalize();
    return D;
}

namespace {

/* Closed-form coefficient and degree for one type, written the way the
   summed theorems state them (independently of the family table):

   Sp_2n, SO_{2n+1}:  sum over X_n of 4^nu M_tau c^tau (u_1 / (2^nu c^tau))^{-s},
   nu = [r > 0] for Sp and 0 for SOodd.

   SO_2n^eps: sum over X_n^{0,eps} of 2 M_tau c^tau (u_2 / c^tau)^{-s}
            + sum over r = 1 of M_tau C_eps^tau (u_2 / C_eps^tau)^{-s}
            + sum over r >= 2 of 4 M_tau c^tau (u_2 / (2 c^tau))^{-s}. */
struct ClosedTerm {
    QPoly degree;
    QPoly coeff;
};

std::vector<ClosedTerm> closed_terms(const GroupKind& kind) {
    std::vector<ClosedTerm> out;
    QPoly u = group_order_poly(kind);
    for (auto& tau : enumerate_types(kind.n)) {
        if (kind.fam == Family::SOeven && tau.r == 0 && tau.sign() != kind.eps) continue;
        QPoly mass = type_mass(tau);
        QPoly core = centralizer_core(tau);
        if (kind.fam == Family::Sp || kind.fam == Family::SOodd) {
            int nu = (kind.fam == Family::Sp && tau.r > 0) ? 1 : 0;
            QPoly denom = nu ? core * QPoly(2) : core;
            out.push_back({u.div_exact(denom), mass * core * QPoly(nu ? 4L : 1L)});
        } else if (tau.r == 0) {
            out.push_back({u.div_exact(core), mass * core * QPoly(2)});
        } else if (tau.r == 1) {
            QPoly cf = centralizer_poly(kind, tau);
            out.push_back({u.div_exact(cf), mass * cf});
        } else {
            out.push_back({u.div_exact(core * QPoly(2)), mass * core * QPoly(4L)});
        }
    }
    return out;
}

}  // namespace

DirichletPoly dirichlet_closed_form(const GroupKind& kind, const BigInt& q) {
    if (kind.fam == Family::SOeven && q <= 3)
        fail(Errc::SmallFieldUnsupported,
             "the even orthogonal classification needs a residue field with more than 3 elements");
    DirichletPoly D;
    for (auto& term : closed_terms(kind)) {
        BigInt a = term.coeff.eval_int(q);
        if (a == 0) continue;
        D.add_term(term.degree.eval_int(q), a);
    }
    D.normalize();
    return D;
}

std::map<QPoly, QPoly> dirichlet_symbolic_families(const GroupKind& kind) {
    std::map<QPoly, QPoly> D;
    for (auto& tau : enumerate_types(kind.n)) {
        if (!is_admissible(kind, tau)) continue;
        QPoly size = orbit_size_poly(kind, tau);
        QPoly coeff = type_mass(tau) * QPoly(static_cast<long>(orbits_per_poly(kind, tau))) *
                      centralizer_poly(kind, tau);
        auto [it, inserted] = D.try_emplace(size, coeff);
        if (!inserted) it->second = it->second + coeff;
    }
    return D;
}

std::map<QPoly, QPoly> dirichlet_symbolic_closed_form(const GroupKind& kind) {
    std::map<QPoly, QPoly> D;
    for (auto& term : closed_terms(kind)) {
        auto [it, inserted] = D.try_emplace(term.degree, term.coeff);
        if (!inserted) it->second = it->second + term.coeff;
    }
    return D;
}

RegZetaSeries reg_zeta(const GroupKind& kind, const BigInt& q) {
    RegZetaSeries s;
    s.kind = kind;
    s.q = q;
    s.level1 = dirichlet_from_families(kind, q);
    s.alpha = kind.alpha();
    return s;
}

Ledger expand(const RegZetaSeries& series, int levels) {
    if (levels < 1) fail(Errc::InvalidRank, "ledger needs at least one level");
    Ledger led;
    BigInt deg_scale = 1, cnt_scale = 1;
    BigInt qn = 1, qa = 1;
    for (int i = 0; i < series.kind.n; ++i) qn *= series.q;
    for (int i = 0; i < series.alpha; ++i) qa *= series.q;
    DirichletPoly merged;
    for (int l = 1; l <= levels; ++l) {
        std::vector<DirichletTerm> layer;
        for (auto& t : series.level1.terms) {
            layer.push_back({t.m * deg_scale, t.a * cnt_scale});
            merged.add_term(t.m * deg_scale, t.a * cnt_scale);
        }
        led.layers.push_back(std::move(layer));
        deg_scale *= qa;
        cnt_scale *= qn;
    }
    merged.normalize();
    led.merged = std::move(merged.terms);
    return led;
}

std::pair<long, long> abscissa(const GroupKind& kind) {
    long num = kind.n, den = kind.alpha();
    long g = std::gcd(num, den);
    return {num / g, den / g};
}

}  // namespace regzeta
