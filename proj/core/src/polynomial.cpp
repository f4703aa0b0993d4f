#include "drg/polynomial.hpp"

#include <utility>

namespace drg {

IntPolynomial IntPolynomial::from_coeffs(std::vector<BigInt> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
    IntPolynomial p;
    p.coeffs_ = std::move(coeffs);
    return p;
}

BigInt IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigRat IntPolynomial::evaluate(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + BigRat(*it);
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return IntPolynomial{};
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = BigInt(i) * coeffs_[i];
    return from_coeffs(std::move(out));
}

IntPolynomial IntPolynomial::second_derivative() const {
    return derivative().derivative();
}

std::string IntPolynomial::render() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0)
            continue;
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        out += BigInt(boost::multiprecision::abs(c)).str();
        if (i == 1)
            out += "*t";
        else if (i >= 2)
            out += "*t^" + std::to_string(i);
    }
    return out;
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<BigInt> out(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = p.coeff(i) + q.coeff(i);
    return IntPolynomial::from_coeffs(std::move(out));
}

}  // namespace drg
