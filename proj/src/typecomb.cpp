#include "regzeta/typecomb.hpp"

#include <algorithm>
#include <functional>

namespace regzeta {

int TypeTriple::weight() const {
    int w = r;
    for (auto& [de, cnt] : S) w += de.first * de.second * cnt;
    for (auto& [de, cnt] : T) w += de.first * de.second * cnt;
    return w;
}

int TypeTriple::sum_eS() const {
    int s = 0;
    for (auto& [de, cnt] : S) s += de.second * cnt;
    return s;
}

std::string TypeTriple::str() const {
    std::string out = "(r=" + std::to_string(r);
    auto block = [&](const char* label, const std::map<std::pair<int, int>, int>& m) {
        out += std::string("; ") + label + "=";
        if (m.empty()) {
            out += "-";
            return;
        }
        bool first = true;
        for (auto& [de, cnt] : m) {
            if (!first) out += ",";
            first = false;
            out += std::to_string(de.first) + ":" + std::to_string(de.second);
            if (cnt != 1) out += "x" + std::to_string(cnt);
        }
    };
    block("S", S);
    block("T", T);
    out += ")";
    return out;
}

namespace {

int moebius(int m) {
    int result = 1;
    for (int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return 0;
            result = -result;
        }
    }
    if (m > 1) result = -result;
    return result;
}

}  // namespace

QPoly irred_count(int d) {
    QPoly sum;
    for (int r = 1; r <= d; ++r) {
        if (d % r != 0) continue;
        int mu = moebius(d / r);
        if (mu != 0) sum = sum + QPoly::monomial(static_cast<size_t>(r), mu);
    }
    return sum * QPoly(BigRat(BigInt(1), BigInt(d)));
}

QPoly even_irred_count(int d) {
    if (d % 2 != 0) return QPoly();
    QPoly sum;
    for (int m = 1; m <= d; m += 2) {
        if (d % m != 0) continue;
        int mu = moebius(m);
        if (mu == 0) continue;
        sum = sum + (QPoly::monomial(static_cast<size_t>(d / (2 * m)), 1) - QPoly(1)) * QPoly(static_cast<long>(mu));
    }
    return sum * QPoly(BigRat(BigInt(1), BigInt(d)));
}

QPoly nonreflexive_count(int d) {
    if (d == 1) return QPoly::t() - QPoly(1);
    return irred_count(d) - even_irred_count(d);
}

QPoly pair_count(int d) { return nonreflexive_count(d) * QPoly(BigRat(BigInt(1), BigInt(2))); }

namespace {

/* Enumerate the multiplicity maps {(d, e) -> count >= 1} with
   sum d*e*count = budget, walking a fixed list of (d, e) cells. */
void enum_multmaps_rec(int budget, size_t idx, const std::vector<std::pair<int, int>>& cells,
                       std::map<std::pair<int, int>, int>& current,
                       const std::function<void(const std::map<std::pair<int, int>, int>&)>& emit) {
    if (budget == 0) {
        emit(current);
        return;
    }
    if (idx == cells.size()) return;
    int unit = cells[idx].first * cells[idx].second;
    enum_multmaps_rec(budget, idx + 1, cells, current, emit);
    for (int cnt = 1; unit * cnt <= budget; ++cnt) {
        current[cells[idx]] = cnt;
        enum_multmaps_rec(budget - unit * cnt, idx + 1, cells, current, emit);
    }
    current.erase(cells[idx]);
}

void enum_multmaps(int budget, std::map<std::pair<int, int>, int>& current,
                   const std::function<void(const std::map<std::pair<int, int>, int>&)>& emit) {
    std::vector<std::pair<int, int>> cells;
    for (int d = 1; d <= budget; ++d)
        for (int e = 1; d * e <= budget; ++e) cells.emplace_back(d, e);
    enum_multmaps_rec(budget, 0, cells, current, emit);
}

}  // namespace

std::vector<TypeTriple> enumerate_types(int n) {
    if (n < 1) fail(Errc::InvalidRank, "type sets X_n need n >= 1");
    std::vector<TypeTriple> out;
    for (int r = 0; r <= n; ++r) {
        int rest = n - r;
        // split rest = wS + wT over the S and T maps
        for (int wS = 0; wS <= rest; ++wS) {
            int wT = rest - wS;
            std::vector<std::map<std::pair<int, int>, int>> smaps, tmaps;
            std::map<std::pair<int, int>, int> cur;
            if (wS == 0)
                smaps.push_back({});
            else
                enum_multmaps(wS, cur, [&](const auto& m) { smaps.push_back(m); });
            cur.clear();
            if (wT == 0)
                tmaps.push_back({});
            else
                enum_multmaps(wT, cur, [&](const auto& m) { tmaps.push_back(m); });
            for (auto& sm : smaps)
                for (auto& tm : tmaps) {
                    TypeTriple tau;
                    tau.r = r;
                    tau.S = sm;
                    tau.T = tm;
                    out.push_back(std::move(tau));
                }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (auto& tau : out)
        if (tau.weight() != n) fail(Errc::Internal, "type enumeration produced a wrong weight");
    return out;
}

std::vector<TypeTriple> enumerate_types_x0(int n, int sign) {
    std::vector<TypeTriple> out;
    for (auto& tau : enumerate_types(n))
        if (tau.r == 0 && tau.sign() == sign) out.push_back(tau);
    return out;
}

QPoly type_mass(const TypeTriple& tau) {
    // group the S and T entries by d
    std::map<int, std::vector<int>> s_by_d, t_by_d;
    for (auto& [de, cnt] : tau.S) s_by_d[de.first].push_back(cnt);
    for (auto& [de, cnt] : tau.T) t_by_d[de.first].push_back(cnt);
    QPoly mass(1);
    for (auto& [d, counts] : s_by_d) {
        int total = 0;
        BigInt denom = 1;
        for (int c : counts) {
            total += c;
            denom *= factorial(static_cast<unsigned>(c));
        }
        BigRat ways(factorial(static_cast<unsigned>(total)), denom);
        mass = mass * qbinom(even_irred_count(2 * d), static_cast<unsigned>(total)) * QPoly(ways);
    }
    for (auto& [d, counts] : t_by_d) {
        int total = 0;
        BigInt denom = 1;
        for (int c : counts) {
            total += c;
            denom *= factorial(static_cast<unsigned>(c));
        }
        BigRat ways(factorial(static_cast<unsigned>(total)), denom);
        mass = mass * qbinom(pair_count(d), static_cast<unsigned>(total)) * QPoly(ways);
    }
    return mass;
}

QPoly centralizer_core(const TypeTriple& tau) {
    int n = tau.weight();
    int cleared = 0;
    QPoly prod(1);
    for (auto& [de, cnt] : tau.S) {
        prod = prod * (QPoly::monomial(static_cast<size_t>(de.first), 1) + QPoly(1)).pow(static_cast<unsigned>(cnt));
        cleared += de.first * cnt;
    }
    for (auto& [de, cnt] : tau.T) {
        prod = prod * (QPoly::monomial(static_cast<size_t>(de.first), 1) - QPoly(1)).pow(static_cast<unsigned>(cnt));
        cleared += de.first * cnt;
    }
    if (cleared > n) fail(Errc::Internal, "centralizer core exponent underflow");
    return QPoly::monomial(static_cast<size_t>(n - cleared), 1) * prod;
}

BigInt type_mass_at(const TypeTriple& tau, const BigInt& q) { return type_mass(tau).eval_int(q); }

BigInt centralizer_core_at(const TypeTriple& tau, const BigInt& q) {
    return centralizer_core(tau).eval_int(q);
}

QPoly group_order_poly(const GroupKind& kind) {
    int n = kind.n;
    if (kind.fam == Family::SOeven) {
        QPoly u = QPoly::monomial(static_cast<size_t>(n * (n - 1)), 1) *
                  (QPoly::monomial(static_cast<size_t>(n), 1) - QPoly(static_cast<long>(kind.eps)));
        for (int i = 1; i <= n - 1; ++i)
            u = u * (QPoly::monomial(static_cast<size_t>(2 * i), 1) - QPoly(1));
        return u;
    }
    QPoly u = QPoly::monomial(static_cast<size_t>(n) * n, 1);
    for (int i = 1; i <= n; ++i) u = u * (QPoly::monomial(static_cast<size_t>(2 * i), 1) - QPoly(1));
    return u;
}

BigInt group_order_at(const GroupKind& kind, const BigInt& q) {
    return group_order_poly(kind).eval_int(q);
}

}  // namespace regzeta
