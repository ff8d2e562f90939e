#include "regzeta/orbitclass.hpp"

namespace regzeta {

bool is_admissible(const GroupKind& kind, const TypeTriple& tau) {
    if (tau.weight() != kind.n) return false;
    if (kind.fam != Family::SOeven) return true;
    return tau.r >= 1 || tau.sign() == kind.eps;
}

int orbits_per_poly(const GroupKind& kind, const TypeTriple& tau) {
    switch (kind.fam) {
        case Family::Sp:
            return tau.r > 0 ? 2 : 1;
        case Family::SOodd:
            return 1;
        case Family::SOeven:
            return tau.r == 1 ? 1 : 2;
    }
    return 1;
}

QPoly centralizer_poly(const GroupKind& kind, const TypeTriple& tau) {
    if (!is_admissible(kind, tau))
        fail(Errc::Internal, "centralizer of an inadmissible type " + tau.str());
    if (kind.fam == Family::SOeven && tau.r == 1) {
        /* The t-block of the underlying module is a 2-dimensional kernel on
           which the form restricts nondegenerately; its isometries contribute
           a full O_2 factor of order 2(q -+ 1), with the sign tied to eps and
           the square class carried by the S-part. */
        int cleared = 0;
        QPoly prod(1);
        for (auto& [de, cnt] : tau.S) {
            prod = prod * (QPoly::monomial(static_cast<size_t>(de.first), 1) + QPoly(1))
                              .pow(static_cast<unsigned>(cnt));
            cleared += de.first * cnt;
        }
        for (auto& [de, cnt] : tau.T) {
            prod = prod * (QPoly::monomial(static_cast<size_t>(de.first), 1) - QPoly(1))
                              .pow(static_cast<unsigned>(cnt));
            cleared += de.first * cnt;
        }
        int n = kind.n;
        if (cleared > n - 1) fail(Errc::Internal, "centralizer exponent underflow");
        long sgn = static_cast<long>(kind.eps) * tau.sign();
        QPoly o2 = QPoly::t() - QPoly(sgn);
        return QPoly::monomial(static_cast<size_t>(n - 1 - cleared), 1) * o2 * prod;
    }
    QPoly core = centralizer_core(tau);
    bool doubled = (kind.fam == Family::Sp && tau.r > 0) ||
                   (kind.fam == Family::SOeven && tau.r >= 2);
    return doubled ? core * QPoly(2) : core;
}

BigInt centralizer_at(const GroupKind& kind, const TypeTriple& tau, const BigInt& q) {
    return centralizer_poly(kind, tau).eval_int(q);
}

QPoly orbit_size_poly(const GroupKind& kind, const TypeTriple& tau) {
    return group_order_poly(kind).div_exact(centralizer_poly(kind, tau));
}

BigInt orbit_size_at(const GroupKind& kind, const TypeTriple& tau, const BigInt& q) {
    BigInt g = group_order_at(kind, q);
    BigInt c = centralizer_at(kind, tau, q);
    if (c == 0 || g % c != 0) fail(Errc::Internal, "centralizer does not divide the group order");
    return g / c;
}

std::vector<OrbitFamily> classify(const GroupKind& kind, const BigInt& q) {
    if (q < 3 || q % 2 == 0) fail(Errc::NotOdd, "classification needs an odd prime power q >= 3");
    if (kind.fam == Family::SOeven && q <= 3)
        fail(Errc::SmallFieldUnsupported,
             "the even orthogonal classification needs a residue field with more than 3 elements");
    std::vector<OrbitFamily> out;
    for (auto& tau : enumerate_types(kind.n)) {
        if (!is_admissible(kind, tau)) continue;
        BigInt mass = type_mass_at(tau, q);
        if (mass == 0) continue;
        OrbitFamily fam;
        fam.tau = tau;
        fam.num_polys = mass;
        fam.orbits_per_poly = orbits_per_poly(kind, tau);
        fam.centralizer_order = centralizer_at(kind, tau, q);
        fam.orbit_size = orbit_size_at(kind, tau, q);
        fam.singular = tau.singular();
        out.push_back(std::move(fam));
    }
    return out;
}

BigInt total_regular_elements(const GroupKind& kind, const BigInt& q) {
    BigInt total = 0;
    for (auto& fam : classify(kind, q)) total += fam.regular_elements();
    return total;
}

}  // namespace regzeta
