#include "regzeta/gf.hpp"

#include <algorithm>

namespace regzeta {

namespace {

constexpr uint64_t kMaxQ = 1u << 20;

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_divisors(uint64_t m) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

/* Dense little-endian polynomial arithmetic over Z/p, used only while the
   field object is under construction (modulus search, generator search). */
using ZpPoly = std::vector<uint32_t>;

ZpPoly zp_trim(ZpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

ZpPoly zp_mul(uint64_t p, const ZpPoly& a, const ZpPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    return zp_trim(std::move(r));
}

ZpPoly zp_mod(uint64_t p, ZpPoly a, const ZpPoly& m) {
    // m monic
    while (a.size() >= m.size()) {
        uint64_t c = a.back();
        size_t shift = a.size() - m.size();
        if (c != 0)
            for (size_t i = 0; i < m.size(); ++i) {
                uint64_t sub = (c * m[i]) % p;
                a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
            }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

ZpPoly zp_powmod(uint64_t p, ZpPoly base, uint64_t e, const ZpPoly& m) {
    ZpPoly r{1};
    base = zp_mod(p, std::move(base), m);
    while (e) {
        if (e & 1) r = zp_mod(p, zp_mul(p, r, base), m);
        base = zp_mod(p, zp_mul(p, base, base), m);
        e >>= 1;
    }
    return r;
}

ZpPoly zp_gcd(uint64_t p, ZpPoly a, ZpPoly b) {
    while (!b.empty()) {
        // make b monic before reducing
        uint64_t lc = b.back();
        if (lc != 1) {
            // lc^{-1} via Fermat
            uint64_t inv = 1, base = lc, e = p - 2;
            while (e) {
                if (e & 1) inv = (inv * base) % p;
                base = (base * base) % p;
                e >>= 1;
            }
            for (auto& c : b) c = static_cast<uint32_t>((uint64_t(c) * inv) % p);
        }
        ZpPoly r = zp_mod(p, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/* Irreducibility of a monic degree-k polynomial over Z/p:
   t^{p^k} = t mod f, and gcd(t^{p^{k/l}} - t, f) = 1 for each prime l | k. */
bool zp_irreducible(uint64_t p, const ZpPoly& f) {
    size_t k = f.size() - 1;
    ZpPoly t{0, 1};
    // t^{p^k} computed by k-fold p-th powering
    ZpPoly x = t;
    for (size_t i = 0; i < k; ++i) x = zp_powmod(p, x, p, f);
    ZpPoly diff = x;
    // diff -= t
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);
    if (!zp_trim(std::move(diff)).empty()) return false;
    for (uint64_t l : prime_divisors(k)) {
        ZpPoly y = t;
        for (size_t i = 0; i < k / l; ++i) y = zp_powmod(p, y, p, f);
        ZpPoly d = y;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = static_cast<uint32_t>((d[1] + p - 1) % p);
        d = zp_trim(std::move(d));
        ZpPoly g = zp_gcd(p, f, d);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

Fq::Fq(uint64_t p, uint64_t k) : p_(p), k_(k) {
    if (!is_prime(p)) fail(Errc::NotPrime, "field characteristic must be prime, got " + std::to_string(p));
    if (p == 2) fail(Errc::NotOdd, "only odd characteristic is supported");
    if (k < 1) fail(Errc::TooLarge, "extension degree must be at least 1");
    uint64_t q = 1;
    for (uint64_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxQ) fail(Errc::TooLarge, "field size exceeds 2^20");
    }
    q_ = static_cast<uint32_t>(q);

    if (k_ == 1) {
        modulus_ = {0, 1};  // t
        return;
    }

    /* Lexicographically least monic irreducible of degree k: scan coefficient
       tuples (c_{k-1}, ..., c_0) in ascending order of the number
       sum c_i p^i read with c_{k-1} most significant. */
    uint64_t total = 1;
    for (uint64_t i = 0; i < k; ++i) total *= p;
    for (uint64_t code = 0; code < total; ++code) {
        // ascending 'code' scans coefficient tuples (c_{k-1}, ..., c_0) in
        // descending-power lex order: c_0 is the least significant digit
        ZpPoly g(k + 1, 0);
        g[k] = 1;
        uint64_t c = code;
        for (size_t i = 0; i < k; ++i) {
            g[i] = static_cast<uint32_t>(c % p);
            c /= p;
        }
        if (zp_irreducible(p, g)) {
            modulus_ = std::move(g);
            break;
        }
    }
    if (modulus_.empty()) fail(Errc::Internal, "no irreducible modulus found");
    build_tables();
}

void Fq::build_tables() {
    /* Generator search: try elements in index order, testing the order via
       the prime divisors of q-1; then exp/log tables. */
    auto mul_raw = [&](uint32_t a, uint32_t b) {
        ZpPoly pa = digits(a), pb = digits(b);
        ZpPoly prod = zp_mod(p_, zp_mul(p_, pa, pb), modulus_);
        uint32_t idx = 0, w = 1;
        for (size_t i = 0; i < prod.size(); ++i) {
            idx += prod[i] * w;
            w = static_cast<uint32_t>(w * p_);
        }
        return idx;
    };
    auto pow_raw = [&](uint32_t a, uint64_t e) {
        uint32_t r = 1, base = a;
        while (e) {
            if (e & 1) r = mul_raw(r, base);
            base = mul_raw(base, base);
            e >>= 1;
        }
        return r;
    };
    std::vector<uint64_t> divs = prime_divisors(q_ - 1);
    uint32_t g = 0;
    for (uint32_t cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (uint64_t l : divs)
            if (pow_raw(cand, (q_ - 1) / l) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (g == 0) fail(Errc::Internal, "no multiplicative generator found");
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    uint32_t cur = 1;
    for (uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_raw(cur, g);
    }
    if (cur != 1) fail(Errc::Internal, "generator order mismatch");
}

std::vector<uint32_t> Fq::digits(uint32_t a) const {
    std::vector<uint32_t> c(k_, 0);
    for (size_t i = 0; i < k_; ++i) {
        c[i] = static_cast<uint32_t>(a % p_);
        a = static_cast<uint32_t>(a / p_);
    }
    return c;
}

uint32_t Fq::from_digits(const std::vector<uint32_t>& c) const {
    uint32_t idx = 0, w = 1;
    for (size_t i = 0; i < k_ && i < c.size(); ++i) {
        idx += (c[i] % p_) * w;
        w = static_cast<uint32_t>(w * p_);
    }
    return idx;
}

uint32_t Fq::add(uint32_t a, uint32_t b) const {
    if (k_ == 1) return static_cast<uint32_t>((uint64_t(a) + b) % p_);
    uint32_t idx = 0, w = 1;
    for (size_t i = 0; i < k_; ++i) {
        uint32_t da = static_cast<uint32_t>(a % p_), db = static_cast<uint32_t>(b % p_);
        a /= static_cast<uint32_t>(p_);
        b /= static_cast<uint32_t>(p_);
        idx += ((da + db) % p_) * w;
        w = static_cast<uint32_t>(w * p_);
    }
    return idx;
}

uint32_t Fq::neg(uint32_t a) const {
    if (k_ == 1) return a == 0 ? 0 : static_cast<uint32_t>(p_ - a);
    uint32_t idx = 0, w = 1;
    for (size_t i = 0; i < k_; ++i) {
        uint32_t d = static_cast<uint32_t>(a % p_);
        a /= static_cast<uint32_t>(p_);
        idx += (d == 0 ? 0 : static_cast<uint32_t>(p_ - d)) * w;
        w = static_cast<uint32_t>(w * p_);
    }
    return idx;
}

uint32_t Fq::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Fq::mul(uint32_t a, uint32_t b) const {
    if (k_ == 1) return static_cast<uint32_t>((uint64_t(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    uint64_t e = uint64_t(log_[a]) + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
}

uint32_t Fq::inv(uint32_t a) const {
    if (a == 0) fail(Errc::ZeroInput, "inverse of zero");
    if (k_ == 1) return pow(a, p_ - 2);
    uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

uint32_t Fq::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (k_ == 1) {
        uint64_t r = 1, base = a;
        while (e) {
            if (e & 1) r = (r * base) % p_;
            base = (base * base) % p_;
            e >>= 1;
        }
        return static_cast<uint32_t>(r);
    }
    uint64_t l = (uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[l];
}

bool Fq::is_square(uint32_t a) const {
    if (a == 0) fail(Errc::ZeroInput, "square class of zero is undefined");
    if (k_ == 1) return pow(a, (p_ - 1) / 2) == 1;
    return log_[a] % 2 == 0;
}

uint32_t Fq::least_nonsquare() const {
    for (uint32_t a = 2; a < q_; ++a)
        if (!is_square(a)) return a;
    fail(Errc::Internal, "no nonsquare in field of odd order > 1");
}

uint32_t Fq::from_int(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += static_cast<int64_t>(p_);
    return static_cast<uint32_t>(r);
}

std::string Fq::elem_str(uint32_t a) const { return std::to_string(a); }

}  // namespace regzeta
