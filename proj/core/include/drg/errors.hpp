#ifndef DRG_ERRORS_HPP
#define DRG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace drg {

// Base class for every input-level failure raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An intersection array violating one of the hard structural constraints
// (lengths, positivity, c_1 = 1, integral sphere sizes, even n*k_i).
class HardInvalid : public Error {
public:
    using Error::Error;
};

// Sphere size k_i is not a positive integer; the array cannot belong to a graph.
class NonIntegralSphere : public HardInvalid {
public:
    NonIntegralSphere(int level, const std::string& what)
        : HardInvalid(what), level_(level) {}
    int level() const { return level_; }

private:
    int level_;
};

// n*k_i is odd, so the Hosoya coefficient at t^i would not be an integer.
class NonIntegralCoefficient : public HardInvalid {
public:
    NonIntegralCoefficient(int index, const std::string& what)
        : HardInvalid(what), index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

// Strongly regular parameters fail (n-k-1)*mu = k*(k-lambda-1).
class RelationViolated : public Error {
public:
    using Error::Error;
};

// An operation that presupposes connectivity was given a disconnected graph.
class Disconnected : public Error {
public:
    using Error::Error;
};

// Family generator parameters outside the supported range.
class BadParams : public Error {
public:
    using Error::Error;
};

// A requested graph would exceed the configured desk-scale size cap.
class SizeLimit : public Error {
public:
    using Error::Error;
};

// Malformed edge-list text or an inconsistent declared vertex count.
class BadInput : public Error {
public:
    using Error::Error;
};

}  // namespace drg

#endif
