#include "regzeta/matfq.hpp"

#include <algorithm>

#include "regzeta/error.hpp"

namespace regzeta {

MatFq mat_add(const Fq& F, const MatFq& A, const MatFq& B) {
    MatFq R(A.n);
    for (size_t i = 0; i < A.a.size(); ++i) R.a[i] = F.add(A.a[i], B.a[i]);
    return R;
}

MatFq mat_sub(const Fq& F, const MatFq& A, const MatFq& B) {
    MatFq R(A.n);
    for (size_t i = 0; i < A.a.size(); ++i) R.a[i] = F.sub(A.a[i], B.a[i]);
    return R;
}

MatFq mat_mul(const Fq& F, const MatFq& A, const MatFq& B) {
    int n = A.n;
    MatFq R(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            uint32_t aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j)
                R.at(i, j) = F.add(R.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return R;
}

MatFq mat_scal(const Fq& F, uint32_t s, const MatFq& A) {
    MatFq R(A.n);
    for (size_t i = 0; i < A.a.size(); ++i) R.a[i] = F.mul(s, A.a[i]);
    return R;
}

MatFq mat_transpose(const MatFq& A) {
    MatFq R(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) R.at(j, i) = A.at(i, j);
    return R;
}

bool mat_is_zero(const MatFq& A) {
    return std::all_of(A.a.begin(), A.a.end(), [](uint32_t v) { return v == 0; });
}

uint32_t mat_det(const Fq& F, MatFq A) {
    int n = A.n;
    uint32_t det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (A.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
            det = F.neg(det);
        }
        uint32_t d = A.at(col, col);
        det = F.mul(det, d);
        uint32_t dinv = F.inv(d);
        for (int r = col + 1; r < n; ++r) {
            uint32_t f = F.mul(A.at(r, col), dinv);
            if (f == 0) continue;
            for (int j = col; j < n; ++j) A.at(r, j) = F.sub(A.at(r, j), F.mul(f, A.at(col, j)));
        }
    }
    return det;
}

std::optional<MatFq> mat_inverse(const Fq& F, MatFq A) {
    int n = A.n;
    MatFq inv = MatFq::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (A.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(A.at(piv, j), A.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        uint32_t dinv = F.inv(A.at(col, col));
        for (int j = 0; j < n; ++j) {
            A.at(col, j) = F.mul(A.at(col, j), dinv);
            inv.at(col, j) = F.mul(inv.at(col, j), dinv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            uint32_t f = A.at(r, col);
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                A.at(r, j) = F.sub(A.at(r, j), F.mul(f, A.at(col, j)));
                inv.at(r, j) = F.sub(inv.at(r, j), F.mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

int row_rank(const Fq& F, std::vector<std::vector<uint32_t>> rows) {
    size_t width = 0;
    for (auto& r : rows) width = std::max(width, r.size());
    for (auto& r : rows) r.resize(width, 0);
    int rank = 0;
    for (size_t col = 0; col < width && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                piv = static_cast<int>(r);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        uint32_t dinv = F.inv(rows[rank][col]);
        for (size_t j = col; j < width; ++j) rows[rank][j] = F.mul(rows[rank][j], dinv);
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            uint32_t f = rows[r][col];
            if (f == 0) continue;
            for (size_t j = col; j < width; ++j)
                rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<uint32_t>> null_space(const Fq& F, std::vector<std::vector<uint32_t>> rows,
                                              size_t width) {
    for (auto& r : rows) r.resize(width, 0);
    std::vector<int> pivot_of_col(width, -1);
    int rank = 0;
    for (size_t col = 0; col < width && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                piv = static_cast<int>(r);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        uint32_t dinv = F.inv(rows[rank][col]);
        for (size_t j = col; j < width; ++j) rows[rank][j] = F.mul(rows[rank][j], dinv);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank) continue;
            uint32_t f = rows[r][col];
            if (f == 0) continue;
            for (size_t j = col; j < width; ++j)
                rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[rank][j]));
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    std::vector<std::vector<uint32_t>> basis;
    for (size_t freecol = 0; freecol < width; ++freecol) {
        if (pivot_of_col[freecol] >= 0) continue;
        std::vector<uint32_t> v(width, 0);
        v[freecol] = 1;
        for (size_t col = 0; col < width; ++col) {
            int piv = pivot_of_col[col];
            if (piv >= 0) v[col] = F.neg(rows[piv][freecol]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Poly min_poly(const Fq& F, const MatFq& A) {
    /* Echelonize flattened powers I, A, A^2, ... carrying the combination
       coefficients; the first power that reduces to zero yields the monic
       minimal polynomial. */
    size_t dim = A.a.size();
    std::vector<std::vector<uint32_t>> ech;                 // echelon rows over F_q^dim
    std::vector<std::vector<uint32_t>> combo;               // matching combinations
    std::vector<int> pivcol;
    MatFq P = MatFq::identity(A.n);
    for (int power = 0;; ++power) {
        std::vector<uint32_t> v = P.a;
        std::vector<uint32_t> comb(static_cast<size_t>(power) + 1, 0);
        comb[power] = 1;
        for (size_t r = 0; r < ech.size(); ++r) {
            uint32_t f = v[pivcol[r]];
            if (f == 0) continue;
            for (size_t j = 0; j < dim; ++j) v[j] = F.sub(v[j], F.mul(f, ech[r][j]));
            for (size_t j = 0; j < combo[r].size() && j < comb.size(); ++j)
                comb[j] = F.sub(comb[j], F.mul(f, combo[r][j]));
        }
        int pc = -1;
        for (size_t j = 0; j < dim; ++j)
            if (v[j] != 0) {
                pc = static_cast<int>(j);
                break;
            }
        if (pc < 0) return Poly(std::move(comb));  // monic: comb[power] stayed 1
        uint32_t dinv = F.inv(v[pc]);
        for (size_t j = 0; j < dim; ++j) v[j] = F.mul(v[j], dinv);
        for (auto& cc : comb) cc = F.mul(cc, dinv);
        ech.push_back(std::move(v));
        combo.push_back(std::move(comb));
        pivcol.push_back(pc);
        P = mat_mul(F, P, A);
    }
}

MatKey mat_key(const MatFq& A) {
    if (A.a.size() > 64) fail(Errc::Internal, "mat_key: matrix larger than 8x8");
    MatKey k{};
    for (size_t i = 0; i < A.a.size(); ++i) {
        if (A.a[i] > 0xFF) fail(Errc::Internal, "mat_key: entry does not fit in 8 bits");
        k[i / 8] |= static_cast<uint64_t>(A.a[i]) << ((i % 8) * 8);
    }
    return k;
}

}  // namespace regzeta
