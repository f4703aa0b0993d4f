#ifndef DRG_POLYNOMIAL_HPP
#define DRG_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace drg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. coeff(i) is the coefficient of t^i. Values are kept in
/// normal form: the highest-index stored coefficient is nonzero, and the
/// zero polynomial stores nothing. Immutable after construction.
class IntPolynomial {
public:
    IntPolynomial() = default;

    static IntPolynomial from_coeffs(std::vector<BigInt> coeffs);

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    // Coefficient of t^i; zero beyond the degree.
    BigInt coeff(std::size_t i) const;

    BigRat evaluate(const BigRat& x) const;

    IntPolynomial derivative() const;
    IntPolynomial second_derivative() const;

    // Canonical ascending-power text, e.g. "12*t + 12*t^2 + 4*t^3".
    // The zero polynomial renders as "0".
    std::string render() const;

    bool operator==(const IntPolynomial&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

// Coefficient-wise sum (used by linearity checks; no further polynomial
// arithmetic is provided).
IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace drg

#endif
