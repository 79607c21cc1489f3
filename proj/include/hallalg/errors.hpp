#pragma once

#include <stdexcept>
#include <string>

namespace hallalg {

// Base class for every error raised by the library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation was violated.
struct precondition_error : error {
    explicit precondition_error(const std::string& what) : error(what) {}
};

// Two operands do not live over the same quiver/field/line.
struct typing_error : precondition_error {
    explicit typing_error(const std::string& what) : precondition_error(what) {}
};

// A representation is not adapted to the partition it was used with.
struct adaptedness_error : precondition_error {
    explicit adaptedness_error(const std::string& what) : precondition_error(what) {}
};

// Ownership flags of two partitions clash at a shared cut value.
struct refinement_conflict_error : precondition_error {
    explicit refinement_conflict_error(const std::string& what) : precondition_error(what) {}
};

// An enumeration or counting task exceeded its work budget.
struct resource_error : error {
    explicit resource_error(const std::string& what) : error(what) {}
};

// Exact integer arithmetic left the 64-bit range.
struct overflow_error : resource_error {
    explicit overflow_error(const std::string& what) : resource_error(what) {}
};

// Interpolation data is inconsistent or yields non-integer coefficients.
struct interpolation_error : error {
    explicit interpolation_error(const std::string& what) : error(what) {}
};

// A count that was expected to be polynomial in q failed held-out validation.
struct polynomiality_error : error {
    explicit polynomiality_error(const std::string& what) : error(what) {}
};

// Malformed input document (CLI layer).
struct schema_error : error {
    explicit schema_error(const std::string& what) : error(what) {}
};

}  // namespace hallalg
