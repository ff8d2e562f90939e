#include "regzeta/bigq.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace regzeta {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

QPoly::QPoly(const BigRat& constant) {
    if (constant != 0) c_.push_back(constant);
}
QPoly::QPoly(const BigInt& constant) : QPoly(BigRat(constant)) {}
QPoly::QPoly(long constant) : QPoly(BigRat(constant)) {}
QPoly::QPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::t() { return monomial(1); }

QPoly QPoly::monomial(size_t e, const BigRat& c) {
    std::vector<BigRat> v(e + 1, BigRat(0));
    v[e] = c;
    return QPoly(std::move(v));
}

const BigRat& QPoly::coeff(size_t i) const {
    static const BigRat zero(0);
    return i < c_.size() ? c_[i] : zero;
}

bool QPoly::is_integral() const {
    for (const auto& c : c_)
        if (denominator(c) != 1) return false;
    return true;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<BigRat> r(std::max(c_.size(), o.c_.size()), BigRat(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<BigRat> r(std::max(c_.size(), o.c_.size()), BigRat(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<BigRat> r(c_.size() + o.c_.size() - 1, BigRat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
    std::vector<BigRat> r = c_;
    for (auto& c : r) c = -c;
    return QPoly(std::move(r));
}

QPoly QPoly::pow(unsigned e) const {
    QPoly r(1);
    QPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::strong_ordering QPoly::operator<=>(const QPoly& o) const {
    if (degree() != o.degree()) return degree() <=> o.degree();
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
        if (i == 0) break;
    }
    return std::strong_ordering::equal;
}

BigRat QPoly::eval(const BigRat& x) const {
    BigRat acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
        if (i == 0) break;
    }
    return acc;
}

BigInt QPoly::eval_int(const BigInt& x) const {
    BigRat v = eval(BigRat(x));
    if (denominator(v) != 1)
        fail(Errc::Internal, "counting polynomial evaluated to the non-integer " + v.str());
    return numerator(v);
}

QPoly QPoly::div_exact(const QPoly& d) const {
    if (d.is_zero()) fail(Errc::ZeroInput, "polynomial division by zero");
    std::vector<BigRat> rem = c_;
    int dd = d.degree();
    if (degree() < dd) {
        if (!is_zero()) fail(Errc::Internal, "inexact polynomial division");
        return QPoly();
    }
    std::vector<BigRat> quo(c_.size() - d.c_.size() + 1, BigRat(0));
    for (size_t i = rem.size(); i-- >= d.c_.size();) {
        BigRat f = rem[i] / d.c_.back();
        if (f != 0) {
            size_t shift = i - dd;
            quo[shift] = f;
            for (size_t j = 0; j < d.c_.size(); ++j) rem[shift + j] -= f * d.c_[j];
        }
        if (i == d.c_.size() - 1) break;
    }
    for (const auto& r : rem)
        if (r != 0) fail(Errc::Internal, "inexact polynomial division");
    return QPoly(std::move(quo));
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        const BigRat& c = c_[i];
        if (c != 0) {
            bool neg = c < 0;
            BigRat mag = neg ? BigRat(-c) : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            bool unit = (mag == 1) && i > 0;
            if (!unit) out += mag.str();
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        if (i == 0) break;
    }
    return out;
}

QPoly qbinom(const QPoly& f, unsigned j) {
    QPoly prod(1);
    for (unsigned i = 0; i < j; ++i) prod = prod * (f - QPoly(static_cast<long>(i)));
    return prod * QPoly(BigRat(BigInt(1), factorial(j)));
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace regzeta
