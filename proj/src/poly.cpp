#include "regzeta/poly.hpp"

#include <algorithm>

namespace regzeta {

Poly poly_add(const Fq& F, const Poly& a, const Poly& b) {
    std::vector<uint32_t> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(r));
}

Poly poly_sub(const Fq& F, const Poly& a, const Poly& b) {
    std::vector<uint32_t> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(r));
}

Poly poly_mul(const Fq& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<uint32_t> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
    }
    return Poly(std::move(r));
}

Poly poly_scal(const Fq& F, uint32_t s, const Poly& a) {
    std::vector<uint32_t> r(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = F.mul(s, a.c[i]);
    return Poly(std::move(r));
}

std::pair<Poly, Poly> poly_divrem(const Fq& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(Errc::ZeroInput, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<uint32_t> rem = a.c;
    std::vector<uint32_t> quo(a.c.size() - b.c.size() + 1, 0);
    uint32_t lcinv = F.inv(b.lc());
    for (size_t i = rem.size(); i-- >= b.c.size();) {
        uint32_t f = F.mul(rem[i], lcinv);
        if (f != 0) {
            quo[i - (b.c.size() - 1)] = f;
            size_t shift = i - (b.c.size() - 1);
            for (size_t j = 0; j < b.c.size(); ++j)
                rem[shift + j] = F.sub(rem[shift + j], F.mul(f, b.c[j]));
        }
        if (i == b.c.size() - 1) break;
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_rem(const Fq& F, const Poly& a, const Poly& b) { return poly_divrem(F, a, b).second; }

bool poly_divides(const Fq& F, const Poly& d, const Poly& a) {
    return poly_rem(F, a, d).is_zero();
}

Poly poly_monic(const Fq& F, const Poly& a) {
    if (a.is_zero() || a.lc() == 1) return a;
    return poly_scal(F, F.inv(a.lc()), a);
}

Poly poly_gcd(const Fq& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

Poly poly_derivative(const Fq& F, const Poly& a) {
    if (a.c.size() <= 1) return Poly();
    std::vector<uint32_t> r(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = F.mul(F.from_int(static_cast<int64_t>(i)), a.c[i]);
    return Poly(std::move(r));
}

Poly poly_pow_mod(const Fq& F, Poly base, uint64_t e, const Poly& mod) {
    Poly r = Poly::one();
    base = poly_rem(F, base, mod);
    while (e) {
        if (e & 1) r = poly_rem(F, poly_mul(F, r, base), mod);
        base = poly_rem(F, poly_mul(F, base, base), mod);
        e >>= 1;
    }
    return r;
}

uint32_t poly_eval(const Fq& F, const Poly& a, uint32_t x) {
    uint32_t acc = 0;
    for (size_t i = a.c.size(); i-- > 0;) {
        acc = F.add(F.mul(acc, x), a.c[i]);
        if (i == 0) break;
    }
    return acc;
}

Poly poly_neg_arg(const Fq& F, const Poly& a) {
    Poly r = a;
    for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = F.neg(r.c[i]);
    return r;
}

Poly poly_reflect(const Fq& F, const Poly& a) { return poly_monic(F, poly_neg_arg(F, a)); }

bool poly_is_even(const Fq& F, const Poly& a) { return poly_neg_arg(F, a) == a; }

bool poly_is_odd(const Fq& F, const Poly& a) {
    Poly n = poly_neg_arg(F, a);
    for (auto& cc : n.c) cc = F.neg(cc);
    return Poly(std::move(n.c)) == a;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        if (i == 0) break;
    }
    return false;
}

std::string poly_str(const Fq& F, const Poly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::string out;
    for (size_t i = a.c.size(); i-- > 0;) {
        uint32_t c = a.c[i];
        if (c != 0) {
            if (!out.empty()) out += " + ";
            if (i == 0)
                out += F.elem_str(c);
            else {
                if (c != 1) out += F.elem_str(c) + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        if (i == 0) break;
    }
    return out;
}

namespace {

struct SplitMix64 {
    uint64_t s;
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

uint64_t seed_from(const Fq& F, const Poly& f) {
    uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](uint64_t v) { h = (h ^ v) * 0x100000001b3ull; };
    mix(F.p());
    mix(F.k());
    for (uint32_t c : f.c) mix(c);
    return h;
}

// x -> x^q mod f via binary powering (q fits in 64 bits).
Poly frobenius(const Fq& F, const Poly& x, const Poly& f) {
    return poly_pow_mod(F, x, F.q(), f);
}

// p-th root of a p-th-power polynomial: strip exponents by p, rooting each
// coefficient with the inverse Frobenius a -> a^{q/p}.
Poly pth_root(const Fq& F, const Poly& a) {
    uint64_t p = F.p();
    uint64_t root_exp = F.q() / p;  // a^{p^{k-1}} inverts x -> x^p
    std::vector<uint32_t> r(a.c.size() / p + 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        if (i % p != 0) fail(Errc::Internal, "pth_root of a non-p-th-power");
        r[i / p] = F.pow(a.c[i], root_exp);
    }
    return Poly(std::move(r));
}

void squarefree_into(const Fq& F, const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
    // Yun's algorithm adapted to characteristic p; f monic nonconstant.
    Poly d = poly_derivative(F, f);
    if (d.is_zero()) {
        squarefree_into(F, pth_root(F, f), mult * static_cast<int>(F.p()), out);
        return;
    }
    Poly c = poly_gcd(F, f, d);
    Poly w = poly_divrem(F, f, c).first;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(F, w, c);
        Poly z = poly_divrem(F, w, y).first;
        if (z.degree() > 0) out.emplace_back(poly_monic(F, z), mult * i);
        ++i;
        w = std::move(y);
        c = poly_divrem(F, c, w).first;
    }
    if (c.degree() > 0) squarefree_into(F, pth_root(F, c), mult * static_cast<int>(F.p()), out);
}

/* Equal-degree splitting (Cantor-Zassenhaus, odd q): f is a product of k >= 1
   distinct irreducibles of degree d. */
void edf_into(const Fq& F, const Poly& f, int d, SplitMix64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    while (true) {
        std::vector<uint32_t> ac(static_cast<size_t>(f.degree()), 0);
        for (auto& cc : ac) cc = static_cast<uint32_t>(rng.next() % F.q());
        Poly a(std::move(ac));
        if (a.degree() < 1) continue;
        Poly g = poly_gcd(F, a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf_into(F, g, d, rng, out);
            edf_into(F, poly_divrem(F, f, g).first, d, rng, out);
            return;
        }
        // b = a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2} mod f
        Poly b = a;
        for (int i = 1; i < d; ++i) b = poly_rem(F, poly_mul(F, frobenius(F, b, f), a), f);
        b = poly_pow_mod(F, b, (F.q() - 1) / 2, f);
        Poly bm1 = poly_sub(F, b, Poly::one());
        g = poly_gcd(F, bm1, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf_into(F, g, d, rng, out);
            edf_into(F, poly_divrem(F, f, g).first, d, rng, out);
            return;
        }
    }
}

void factor_squarefree_into(const Fq& F, Poly f, int mult, SplitMix64& rng,
                            std::vector<std::pair<Poly, int>>& out) {
    // distinct-degree split of a squarefree monic f, then equal-degree split
    Poly h = Poly::t();
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.emplace_back(f, mult);  // what remains is irreducible
            return;
        }
        h = frobenius(F, h, f);
        Poly g = poly_gcd(F, poly_sub(F, h, Poly::t()), f);
        if (g.degree() > 0) {
            std::vector<Poly> pieces;
            edf_into(F, g, d, rng, pieces);
            for (auto& piece : pieces) out.emplace_back(std::move(piece), mult);
            f = poly_divrem(F, f, g).first;
            h = poly_rem(F, h, f);
        }
    }
}

}  // namespace

std::vector<std::pair<Poly, int>> poly_factor(const Fq& F, const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroInput, "factorization of the zero polynomial");
    Poly g = poly_monic(F, f);
    std::vector<std::pair<Poly, int>> out;
    if (g.degree() < 1) return out;
    SplitMix64 rng{seed_from(F, g)};
    std::vector<std::pair<Poly, int>> squarefree;
    squarefree_into(F, g, 1, squarefree);
    for (auto& [part, mult] : squarefree) factor_squarefree_into(F, part, mult, rng, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first) return a.second < b.second;
        return poly_less(a.first, b.first);
    });
    return out;
}

bool poly_is_irreducible(const Fq& F, const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    Poly g = poly_monic(F, f);
    int n = g.degree();
    // t^{q^n} == t mod g, and gcd(t^{q^{n/l}} - t, g) == 1 for prime l | n
    Poly x = Poly::t();
    for (int i = 0; i < n; ++i) x = frobenius(F, x, g);
    if (!(poly_sub(F, x, Poly::t()).is_zero() ||
          poly_rem(F, poly_sub(F, x, Poly::t()), g).is_zero()))
        return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool lprime = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) lprime = false;
        if (!lprime) continue;
        Poly y = Poly::t();
        for (int i = 0; i < n / l; ++i) y = frobenius(F, y, g);
        if (poly_gcd(F, poly_sub(F, y, Poly::t()), g).degree() != 0) return false;
    }
    return true;
}

TypeTriple type_of(const Fq& F, const Poly& f) {
    if (f.is_zero() || !f.is_monic()) fail(Errc::NotMonic, "type fingerprint needs a monic polynomial");
    if (!poly_is_even(F, f)) fail(Errc::ParityViolation, "type fingerprint needs an even polynomial");
    if (f.degree() % 2 != 0) fail(Errc::Internal, "even polynomial of odd degree");

    TypeTriple tau;
    auto factors = poly_factor(F, f);
    std::vector<std::pair<Poly, int>> paired;
    for (auto& [pf, e] : factors) {
        if (pf == Poly::t()) {
            if (e % 2 != 0) fail(Errc::Internal, "even polynomial with odd t-multiplicity");
            tau.r = e / 2;
            continue;
        }
        if (poly_is_even(F, pf)) {
            if (pf.degree() % 2 != 0) fail(Errc::Internal, "even irreducible of odd degree");
            tau.S[{pf.degree() / 2, e}] += 1;
            continue;
        }
        paired.emplace_back(pf, e);
    }
    // reflection pairs: each {p, p*} with p != p* contributes once
    for (auto& [pf, e] : paired) {
        Poly star = poly_reflect(F, pf);
        if (star == pf) fail(Errc::Internal, "non-even factor fixed by reflection");
        if (!poly_less(pf, star)) continue;  // count the pair at its smaller member
        auto it = std::find_if(paired.begin(), paired.end(),
                               [&](const auto& pr) { return pr.first == star; });
        if (it == paired.end() || it->second != e)
            fail(Errc::Internal, "reflection pair with mismatched multiplicity");
        tau.T[{pf.degree(), e}] += 1;
    }
    if (2 * tau.weight() != f.degree()) fail(Errc::Internal, "type weight disagrees with degree");
    return tau;
}

}  // namespace regzeta
