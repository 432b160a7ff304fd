#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ordseek {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation was violated by the caller.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// An internal invariant failed; indicates a bug, never a caller mistake.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(what) {}
};

// mod_inv on a non-unit. Carries gcd(a, modulus) > 1, which callers may
// use as a factor.
struct NotInvertibleError : PreconditionError {
    mpz_class shared;
    explicit NotInvertibleError(mpz_class g)
        : PreconditionError("value is not invertible; gcd with modulus is " + g.get_str()),
          shared(std::move(g)) {}
};

// order_upto on an element outside the unit group.
struct NotAUnitError : PreconditionError {
    mpz_class shared;
    explicit NotAUnitError(mpz_class g)
        : PreconditionError("element is not a unit; gcd with modulus is " + g.get_str()),
          shared(std::move(g)) {}
};

// Residue-class search with gcd(N, s) != 1.
struct NotCoprimeError : PreconditionError {
    mpz_class shared;
    explicit NotCoprimeError(mpz_class g)
        : PreconditionError("modulus of the residue class shares factor " + g.get_str() +
                            " with the input"),
          shared(std::move(g)) {}
};

// LLL input rows were linearly dependent.
struct DegenerateLatticeError : PreconditionError {
    explicit DegenerateLatticeError(const std::string& what) : PreconditionError(what) {}
};

// Derived lattice-search parameters collapsed (G <= 1); callers fall back
// to a direct scan of the affected range.
struct ParamsDegenerateError : Error {
    explicit ParamsDegenerateError(const std::string& what) : Error(what) {}
};

// The exact size condition failed for an interval search.
struct ConditionViolatedError : PreconditionError {
    explicit ConditionViolatedError(const std::string& what) : PreconditionError(what) {}
};

// Oracle asked to run beyond its size cap.
struct OracleCapError : PreconditionError {
    explicit OracleCapError(const std::string& what) : PreconditionError(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

inline void check_internal(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

}  // namespace ordseek
