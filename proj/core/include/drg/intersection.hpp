#ifndef DRG_INTERSECTION_HPP
#define DRG_INTERSECTION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "drg/errors.hpp"
#include "drg/polynomial.hpp"

namespace drg {

/// Intersection array {b_0,...,b_{D-1}; c_1,...,c_D} of a distance-regular
/// graph. Instances only come out of validate() (or the distance-regularity
/// checker, which goes through validate()), so holding one means every hard
/// structural constraint holds: equal lengths D >= 1, strictly positive
/// entries, c_1 = 1, integral sphere sizes, and even n*k_i for every level.
class IntersectionArray {
public:
    int diameter() const { return static_cast<int>(b_.size()); }
    const std::vector<std::int64_t>& b() const { return b_; }
    const std::vector<std::int64_t>& c() const { return c_; }

    // "{3,2,1; 1,2,3}"
    std::string render() const;

    bool operator==(const IntersectionArray&) const = default;

private:
    IntersectionArray(std::vector<std::int64_t> b, std::vector<std::int64_t> c)
        : b_(std::move(b)), c_(std::move(c)) {}

    friend IntersectionArray validate(std::span<const std::int64_t>,
                                      std::span<const std::int64_t>,
                                      std::vector<std::string>*);

    std::vector<std::int64_t> b_;
    std::vector<std::int64_t> c_;
};

/// Sphere sizes k_0..k_D around any vertex (k_i = |G_i(v)|, independent of v)
/// together with the graph order n = sum k_i they force.
struct SphereSizes {
    std::vector<BigInt> k;
    BigInt n;
};

/// Checks the hard constraints and returns the validated array; throws
/// HardInvalid (or a subclass) naming the violated constraint and index.
/// The standard monotonicity conditions b_0 >= b_1 >= ... and
/// c_1 <= c_2 <= ... are not required by the closed forms, so violations are
/// reported as non-fatal warnings through `warnings` when provided.
IntersectionArray validate(std::span<const std::int64_t> b,
                           std::span<const std::int64_t> c,
                           std::vector<std::string>* warnings = nullptr);

/// k_0 = 1, k_1 = b_0, and k_i = (prod_{j<i} b_j) / (prod_{2<=j<=i} c_j),
/// computed with exact rationals; n = sum k_i. Cannot fail on a validated
/// array.
SphereSizes sphere_sizes(const IntersectionArray& a);

/// H(G,t) = (n*b_0/2) * (t + sum_{i=2}^{D} (prod_{j=1}^{i-1} b_j) /
/// (prod_{j=2}^{i} c_j) * t^i). The coefficient of t^i equals n*k_i/2.
IntPolynomial hosoya_closed_form(const IntersectionArray& a);

/// W(G) = (n*b_0/2) * (1 + sum_{i=2}^{D} i * (prod_{j=1}^{i-1} b_j) /
/// (prod_{j=2}^{i} c_j)); equals H'(1).
BigInt wiener_closed_form(const IntersectionArray& a);

/// WW(G) = H'(1) + H''(1)/2, the polynomial route to (1/2) sum (d + d^2).
BigInt hyper_wiener_closed_form(const IntersectionArray& a);

/// Strongly regular parameter quadruple (n, k, lambda, mu).
struct SrgParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;
};

/// Diagnostic outcome of the parameter checks; `reason` is empty iff `ok`.
struct SrgFeasibility {
    bool ok = false;
    std::string reason;
};

/// Checks lambda >= 0, mu >= 1, 0 < k < n-1, and the parameter relation
/// (n-k-1)*mu = k*(k-lambda-1), reporting the first failure.
SrgFeasibility srg_feasibility(const SrgParams& p);

/// The two-level array {k, k-lambda-1; 1, mu} of a strongly regular graph.
IntersectionArray srg_to_array(const SrgParams& p);

/// H(G,t) = (n*k/2) * (t + ((k-lambda-1)/mu) * t^2), computed exactly.
IntPolynomial srg_hosoya(const SrgParams& p);

/// H(G,t) = (n/2) * (k*t + (n-k-1)*t^2); identical to srg_hosoya whenever the
/// parameter relation holds. Throws RelationViolated otherwise.
IntPolynomial srg_hosoya_simplified(const SrgParams& p);

}  // namespace drg

#endif
