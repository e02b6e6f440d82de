#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace detcount {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
public:
    explicit NotPrime(std::uint64_t p)
        : Error(std::to_string(p) + " is not prime"), value_(p) {}
    std::uint64_t value() const noexcept { return value_; }

private:
    std::uint64_t value_;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

// Element or matrix not valid in the ring it is used with.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

// Malformed ring-spec, element or matrix literal.
class ParseError : public Error {
public:
    using Error::Error;
};

// A rational formula evaluation left a nonzero remainder or disagreed with
// the integer route. Always a hard failure.
class ExactnessError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string what_needed, std::uint64_t budget)
        : Error("enumeration needs " + what_needed + " matrices, budget is " +
                std::to_string(budget)),
          required_(std::move(what_needed)),
          budget_(budget) {}

    // Decimal string: the required count may not fit in 64 bits.
    const std::string& required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::string required_;
    std::uint64_t budget_;
};

}  // namespace detcount
