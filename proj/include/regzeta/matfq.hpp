#ifndef REGZETA_MATFQ_HPP
#define REGZETA_MATFQ_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "regzeta/gf.hpp"
#include "regzeta/poly.hpp"

namespace regzeta {

/* Square matrix over F_q, row-major element indices. */
struct MatFq {
    int n = 0;
    std::vector<uint32_t> a;

    MatFq() = default;
    explicit MatFq(int size) : n(size), a(static_cast<size_t>(size) * size, 0) {}

    uint32_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    uint32_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    bool operator==(const MatFq&) const = default;

    static MatFq identity(int size) {
        MatFq m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = 1;
        return m;
    }
};

MatFq mat_add(const Fq& F, const MatFq& A, const MatFq& B);
MatFq mat_sub(const Fq& F, const MatFq& A, const MatFq& B);
MatFq mat_mul(const Fq& F, const MatFq& A, const MatFq& B);
MatFq mat_scal(const Fq& F, uint32_t s, const MatFq& A);
MatFq mat_transpose(const MatFq& A);
bool mat_is_zero(const MatFq& A);
uint32_t mat_det(const Fq& F, MatFq A);
std::optional<MatFq> mat_inverse(const Fq& F, MatFq A);

// Rank of a list of row vectors (not necessarily square).
int row_rank(const Fq& F, std::vector<std::vector<uint32_t>> rows);

/* Basis of the right kernel of the matrix whose rows are given (each row a
   linear functional on F_q^width).  Deterministic echelon construction: free
   variables in ascending index order, pivot entries normalized. */
std::vector<std::vector<uint32_t>> null_space(const Fq& F, std::vector<std::vector<uint32_t>> rows,
                                              size_t width);

// Minimal polynomial: first linear dependence among I, A, A^2, ... (monic).
Poly min_poly(const Fq& F, const MatFq& A);

/* Packed key for hash containers: 8 bits per entry, so n^2 <= 64 and q <= 256
   (Internal error beyond; every in-budget oracle configuration fits).
   Keys compare equal iff the matrices do. */
using MatKey = std::array<uint64_t, 8>;
MatKey mat_key(const MatFq& A);

struct MatKeyHash {
    size_t operator()(const MatKey& k) const noexcept {
        uint64_t h = 0xcbf29ce484222325ull;
        for (uint64_t w : k) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace regzeta

#endif
