#ifndef REGZETA_POLY_HPP
#define REGZETA_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "regzeta/gf.hpp"
#include "regzeta/type_triple.hpp"

namespace regzeta {

/* Dense univariate polynomial over F_q.  Coefficients are field-element
   indices, little-endian; the zero polynomial is the empty vector and every
   nonzero one keeps a nonzero leading coefficient. */
struct Poly {
    std::vector<uint32_t> c;

    Poly() = default;
    explicit Poly(std::vector<uint32_t> coeffs) : c(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    uint32_t lc() const { return c.back(); }
    uint32_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const Poly&) const = default;

    static Poly one() { return Poly({1}); }
    static Poly t() { return Poly({0, 1}); }
    static Poly t_pow(size_t e) {
        std::vector<uint32_t> v(e + 1, 0);
        v[e] = 1;
        return Poly(std::move(v));
    }
};

Poly poly_add(const Fq& F, const Poly& a, const Poly& b);
Poly poly_sub(const Fq& F, const Poly& a, const Poly& b);
Poly poly_mul(const Fq& F, const Poly& a, const Poly& b);
Poly poly_scal(const Fq& F, uint32_t s, const Poly& a);

// Quotient and remainder by a nonzero divisor.
std::pair<Poly, Poly> poly_divrem(const Fq& F, const Poly& a, const Poly& b);
Poly poly_rem(const Fq& F, const Poly& a, const Poly& b);
bool poly_divides(const Fq& F, const Poly& d, const Poly& a);

Poly poly_monic(const Fq& F, const Poly& a);
Poly poly_gcd(const Fq& F, Poly a, Poly b);  // monic gcd
Poly poly_derivative(const Fq& F, const Poly& a);
Poly poly_pow_mod(const Fq& F, Poly base, uint64_t e, const Poly& mod);
uint32_t poly_eval(const Fq& F, const Poly& a, uint32_t x);

// f(-t), and its monic normalization ("reflection").
Poly poly_neg_arg(const Fq& F, const Poly& a);
Poly poly_reflect(const Fq& F, const Poly& a);
bool poly_is_even(const Fq& F, const Poly& a);  // f(-t) == f(t)
bool poly_is_odd(const Fq& F, const Poly& a);   // f(-t) == -f(t)

// Total order: by degree, then descending-power coefficient comparison.
bool poly_less(const Poly& a, const Poly& b);

std::string poly_str(const Fq& F, const Poly& a, const std::string& var = "t");

/* Full factorization of a nonzero polynomial into monic irreducibles
   (squarefree split, then distinct-degree, then equal-degree via
   Cantor-Zassenhaus with a PRNG seeded from the input, so the run is
   deterministic).  Factors are sorted by poly_less; multiplicities >= 1. */
std::vector<std::pair<Poly, int>> poly_factor(const Fq& F, const Poly& f);

bool poly_is_irreducible(const Fq& F, const Poly& f);

/* Type fingerprint of a monic EVEN polynomial (ParityViolation otherwise;
   NotMonic for non-monic input).  For f of degree 2n the result lies in
   X_n.  Callers key odd polynomials by an even companion: m/t for a
   minimal polynomial of odd degree, t*m for the singular even-rank case. */
TypeTriple type_of(const Fq& F, const Poly& f);

}  // namespace regzeta

#endif
