#pragma once

#include <stdexcept>
#include <string>

namespace sympair {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shapes of two operands are incompatible.
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// Malformed textual input (rational literal, JSON field, ...).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// A linear system that was expected to be solvable is not.
struct SingularSystem : Error {
    explicit SingularSystem(const std::string& what) : Error(what) {}
};

/// Operators handed to a joint diagonalization do not commute.
struct NonCommuting : Error {
    explicit NonCommuting(const std::string& what) : Error(what) {}
};

/// An operator has eigenvalues outside the rationals.
struct NonRationalSpectrum : Error {
    explicit NonRationalSpectrum(const std::string& what) : Error(what) {}
};

/// An operator is not diagonalizable over the rationals.
struct NotDiagonalizable : Error {
    explicit NotDiagonalizable(const std::string& what) : Error(what) {}
};

/// Structure constants violate super skew symmetry or the super Jacobi identity.
struct NotLieSuperalgebra : Error {
    explicit NotLieSuperalgebra(const std::string& what) : Error(what) {}
};

/// The bilinear form is not even, supersymmetric, invariant, or nondegenerate.
struct BadForm : Error {
    explicit BadForm(const std::string& what) : Error(what) {}
};

/// The supplied map is not an involutive automorphism compatible with the form.
struct BadInvolution : Error {
    explicit BadInvolution(const std::string& what) : Error(what) {}
};

/// The supplied Cartan subspace fails one of its defining properties.
struct BadCartan : Error {
    explicit BadCartan(const std::string& what) : Error(what) {}
};

/// The pair is not of even type (nonzero odd centralizer of the Cartan subspace).
struct NotEvenType : Error {
    explicit NotEvenType(const std::string& what) : Error(what) {}
};

/// Reflection requested in an isotropic root.
struct IsotropicRoot : Error {
    explicit IsotropicRoot(const std::string& what) : Error(what) {}
};

/// Weyl group closure exceeded the hard element bound.
struct ClosureBoundExceeded : Error {
    explicit ClosureBoundExceeded(const std::string& what) : Error(what) {}
};

/// A point of the Cartan subspace is not (oddly) regular.
struct NotRegular : Error {
    explicit NotRegular(const std::string& what) : Error(what) {}
};

/// A radial operator application left the polynomial ring (negative powers survive).
struct LaurentRemainder : Error {
    explicit LaurentRemainder(const std::string& what) : Error(what) {}
};

} // namespace sympair
