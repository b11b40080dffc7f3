#ifndef ROSTLAT_ERRORS_HPP
#define ROSTLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rostlat {

// Base of every library error; the CLI maps any Error to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A square system with determinant zero was handed to an exact solver.
struct SingularMatrix : Error {
    using Error::Error;
};

// A lattice quotient is infinite (sublattice basis with determinant zero).
struct InfiniteQuotient : Error {
    using Error::Error;
};

// Rank outside the bounds of the requested family.
struct InvalidRank : Error {
    using Error::Error;
};

// An index fails the circling condition required by the reduction.
struct ConditionViolated : Error {
    using Error::Error;
};

// The rewrite relation set of a formal expression is not acyclic.
struct CyclicRelations : Error {
    using Error::Error;
};

// Ambient/component shape outside the implemented reduction cases.
struct UnsupportedShape : Error {
    using Error::Error;
};

// Malformed textual input (type strings, index strings, bit strings).
struct ParseError : Error {
    using Error::Error;
};

} // namespace rostlat

#endif
