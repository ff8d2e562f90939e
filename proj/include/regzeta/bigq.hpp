#ifndef REGZETA_BIGQ_HPP
#define REGZETA_BIGQ_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <vector>

#include "regzeta/error.hpp"

namespace regzeta {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/* Dense univariate polynomial over Q.  Every counting quantity in the
   library is one of these in the field-size variable t; integer-valuedness
   is certified at evaluation time rather than assumed. */
class QPoly {
  public:
    QPoly() = default;
    QPoly(const BigRat& constant);
    QPoly(const BigInt& constant);
    QPoly(long constant);
    explicit QPoly(std::vector<BigRat> coeffs);

    static QPoly t();
    static QPoly monomial(size_t e, const BigRat& c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const BigRat& coeff(size_t i) const;
    const std::vector<BigRat>& coeffs() const { return c_; }
    bool is_integral() const;

    QPoly operator+(const QPoly&) const;
    QPoly operator-(const QPoly&) const;
    QPoly operator*(const QPoly&) const;
    QPoly operator-() const;
    QPoly pow(unsigned e) const;

    bool operator==(const QPoly&) const = default;
    std::strong_ordering operator<=>(const QPoly&) const;  // degree, then descending-power coeffs

    BigRat eval(const BigRat& x) const;
    // Evaluation certified integral (Internal error otherwise).
    BigInt eval_int(const BigInt& x) const;

    // Exact division; Internal error on a nonzero remainder.
    QPoly div_exact(const QPoly& d) const;

    std::string str(const std::string& var = "t") const;

  private:
    std::vector<BigRat> c_;  // little-endian, normalized
    void trim();
};

// Falling-factorial binomial C(f, j) = f(f-1)...(f-j+1)/j! of a polynomial.
QPoly qbinom(const QPoly& f, unsigned j);

BigInt factorial(unsigned n);

}  // namespace regzeta

#endif
