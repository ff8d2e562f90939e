#ifndef REGZETA_GF_HPP
#define REGZETA_GF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "regzeta/error.hpp"

namespace regzeta {

/* F_q with q = p^k, p an odd prime, q <= 2^20.

   Elements are indices 0..q-1: the element sum c_i * g^i (g = residue class
   of t modulo the defining polynomial) has index sum c_i * p^i, so index 0
   is zero, index 1 is one, and for k = 1 the index is the least residue.

   The defining polynomial is the lexicographically least monic irreducible
   of degree k over Z/p, coefficient tuples compared from the highest power
   down (so F_9 is built as F_3[t]/(t^2 + 1)).  For k > 1 multiplication runs
   on exp/log tables; for k = 1 directly mod p. */
class Fq {
  public:
    Fq(uint64_t p, uint64_t k = 1);

    uint64_t p() const { return p_; }
    uint64_t k() const { return k_; }
    uint32_t q() const { return q_; }

    // Defining polynomial, little-endian coefficients in Z/p, size k+1, monic.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // ZeroInput on a = 0
    uint32_t pow(uint32_t a, uint64_t e) const;

    // Quadratic residue test for nonzero a; ZeroInput on a = 0.
    bool is_square(uint32_t a) const;
    uint32_t least_nonsquare() const;

    // Embedding of Z via the prime subfield.
    uint32_t from_int(int64_t v) const;

    // Base-p digits of an index = coefficients over the prime subfield.
    std::vector<uint32_t> digits(uint32_t a) const;
    uint32_t from_digits(const std::vector<uint32_t>& c) const;

    std::string elem_str(uint32_t a) const;

  private:
    uint64_t p_, k_;
    uint32_t q_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_, log_;  // built only for k > 1

    void build_tables();
};

}  // namespace regzeta

#endif
