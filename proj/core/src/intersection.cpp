#include "drg/intersection.hpp"

#include <sstream>
#include <utility>

namespace drg {

namespace {

std::string join(std::span<const std::int64_t> xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string fraction_text(const BigRat& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

BigInt sphere_integer(const BigRat& r, int level) {
    if (boost::multiprecision::denominator(r) != 1)
        throw NonIntegralSphere(level, "sphere size k_" + std::to_string(level) +
                                           " = " + fraction_text(r) +
                                           " is not an integer");
    return boost::multiprecision::numerator(r);
}

BigInt coefficient_integer(const BigRat& r, int index, const std::string& what) {
    if (boost::multiprecision::denominator(r) != 1)
        throw NonIntegralCoefficient(index, what + " = " + fraction_text(r) +
                                                " is not an integer");
    return boost::multiprecision::numerator(r);
}

// k_0 = 1 and k_i = k_{i-1} * b_{i-1} / c_i, kept as exact rationals so an
// integral quotient is never lost to a non-integral intermediate.
std::vector<BigInt> spheres_from_raw(std::span<const std::int64_t> b,
                                     std::span<const std::int64_t> c) {
    const int diam = static_cast<int>(b.size());
    std::vector<BigInt> k(diam + 1);
    k[0] = 1;
    BigRat running = 1;
    for (int i = 1; i <= diam; ++i) {
        running *= b[i - 1];
        running /= c[i - 1];
        k[i] = sphere_integer(running, i);
    }
    return k;
}

}  // namespace

std::string IntersectionArray::render() const {
    return "{" + join(b_) + "; " + join(c_) + "}";
}

IntersectionArray validate(std::span<const std::int64_t> b,
                           std::span<const std::int64_t> c,
                           std::vector<std::string>* warnings) {
    if (b.empty() || c.empty())
        throw HardInvalid("intersection array must have diameter >= 1 (b and c non-empty)");
    if (b.size() != c.size())
        throw HardInvalid("b has " + std::to_string(b.size()) + " entries but c has " +
                          std::to_string(c.size()) + "; lengths must both equal the diameter");
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] <= 0)
            throw HardInvalid("b_" + std::to_string(i) + " = " + std::to_string(b[i]) +
                              " must be positive");
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] <= 0)
            throw HardInvalid("c_" + std::to_string(i + 1) + " = " + std::to_string(c[i]) +
                              " must be positive");
    if (c[0] != 1)
        throw HardInvalid("c_1 must equal 1, got " + std::to_string(c[0]));

    const std::vector<BigInt> k = spheres_from_raw(b, c);
    BigInt n = 0;
    for (const BigInt& ki : k)
        n += ki;
    for (std::size_t i = 1; i < k.size(); ++i) {
        if ((n * k[i]) % 2 != 0)
            throw NonIntegralCoefficient(
                static_cast<int>(i),
                "n*k_" + std::to_string(i) + " = " + BigInt(n * k[i]).str() +
                    " is odd, so the pair count at distance " + std::to_string(i) +
                    " would not be an integer");
    }

    if (warnings) {
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if (b[i] < b[i + 1])
                warnings->push_back("b is not non-increasing: b_" + std::to_string(i) +
                                    " = " + std::to_string(b[i]) + " < b_" +
                                    std::to_string(i + 1) + " = " + std::to_string(b[i + 1]));
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            if (c[i] > c[i + 1])
                warnings->push_back("c is not non-decreasing: c_" + std::to_string(i + 1) +
                                    " = " + std::to_string(c[i]) + " > c_" +
                                    std::to_string(i + 2) + " = " + std::to_string(c[i + 1]));
    }

    return IntersectionArray(std::vector<std::int64_t>(b.begin(), b.end()),
                             std::vector<std::int64_t>(c.begin(), c.end()));
}

SphereSizes sphere_sizes(const IntersectionArray& a) {
    SphereSizes s;
    s.k = spheres_from_raw(a.b(), a.c());
    s.n = 0;
    for (const BigInt& ki : s.k)
        s.n += ki;
    return s;
}

IntPolynomial hosoya_closed_form(const IntersectionArray& a) {
    const SphereSizes s = sphere_sizes(a);
    const int diam = a.diameter();
    const BigRat lead = BigRat(s.n * a.b()[0]) / 2;

    std::vector<BigInt> coeffs(diam + 1);
    coeffs[0] = 0;
    coeffs[1] = coefficient_integer(lead, 1, "Hosoya coefficient of t");
    BigRat ratio = 1;  // prod_{j=1}^{i-1} b_j / prod_{j=2}^{i} c_j
    for (int i = 2; i <= diam; ++i) {
        ratio *= a.b()[i - 1];
        ratio /= a.c()[i - 1];
        coeffs[i] = coefficient_integer(lead * ratio, i,
                                        "Hosoya coefficient of t^" + std::to_string(i));
    }
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

BigInt wiener_closed_form(const IntersectionArray& a) {
    const SphereSizes s = sphere_sizes(a);
    const int diam = a.diameter();
    BigRat sum = 1;
    BigRat ratio = 1;
    for (int i = 2; i <= diam; ++i) {
        ratio *= a.b()[i - 1];
        ratio /= a.c()[i - 1];
        sum += BigRat(i) * ratio;
    }
    return coefficient_integer(BigRat(s.n * a.b()[0]) / 2 * sum, 0, "Wiener index");
}

BigInt hyper_wiener_closed_form(const IntersectionArray& a) {
    const IntPolynomial h = hosoya_closed_form(a);
    const BigRat value = h.derivative().evaluate(1) +
                         h.second_derivative().evaluate(1) / 2;
    return coefficient_integer(value, 0, "hyper-Wiener index");
}

SrgFeasibility srg_feasibility(const SrgParams& p) {
    std::ostringstream msg;
    if (p.lambda < 0) {
        msg << "lambda = " << p.lambda << " must be >= 0";
        return {false, msg.str()};
    }
    if (p.mu < 1) {
        msg << "mu = " << p.mu << " must be >= 1";
        return {false, msg.str()};
    }
    if (p.k <= 0 || p.k >= p.n - 1) {
        msg << "k = " << p.k << " must satisfy 0 < k < n-1 = " << p.n - 1
            << " (a strongly regular graph has non-adjacent pairs)";
        return {false, msg.str()};
    }
    const BigInt lhs = BigInt(p.n - p.k - 1) * p.mu;
    const BigInt rhs = BigInt(p.k) * (p.k - p.lambda - 1);
    if (lhs != rhs) {
        msg << "relation (n-k-1)*mu = k*(k-lambda-1) violated: " << lhs.str()
            << " != " << rhs.str();
        return {false, msg.str()};
    }
    return {true, ""};
}

IntersectionArray srg_to_array(const SrgParams& p) {
    if (p.k - p.lambda - 1 <= 0)
        throw HardInvalid("k - lambda - 1 = " + std::to_string(p.k - p.lambda - 1) +
                          " must be positive (diameter would not be 2)");
    const std::int64_t b[] = {p.k, p.k - p.lambda - 1};
    const std::int64_t c[] = {1, p.mu};
    return validate(b, c);
}

IntPolynomial srg_hosoya(const SrgParams& p) {
    const BigRat lead = BigRat(BigInt(p.n) * p.k) / 2;
    std::vector<BigInt> coeffs(3);
    coeffs[0] = 0;
    coeffs[1] = coefficient_integer(lead, 1, "Hosoya coefficient of t");
    coeffs[2] = coefficient_integer(lead * BigRat(p.k - p.lambda - 1, p.mu), 2,
                                    "Hosoya coefficient of t^2");
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

IntPolynomial srg_hosoya_simplified(const SrgParams& p) {
    const BigInt lhs = BigInt(p.n - p.k - 1) * p.mu;
    const BigInt rhs = BigInt(p.k) * (p.k - p.lambda - 1);
    if (lhs != rhs)
        throw RelationViolated("relation (n-k-1)*mu = k*(k-lambda-1) violated: " +
                               lhs.str() + " != " + rhs.str());
    const BigRat half_n = BigRat(p.n) / 2;
    std::vector<BigInt> coeffs(3);
    coeffs[0] = 0;
    coeffs[1] = coefficient_integer(half_n * p.k, 1, "Hosoya coefficient of t");
    coeffs[2] = coefficient_integer(half_n * (p.n - p.k - 1), 2,
                                    "Hosoya coefficient of t^2");
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

}  // namespace drg
