#ifndef VALCURVE_ERRORS_HPP
#define VALCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace valcurve {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A supplied minimal polynomial has a repeated factor.
class NotSquareFree : public Error {
public:
    explicit NotSquareFree(const std::string& what) : Error(what) {}
};

/// The supplied extension polynomial has a rational root, so the
/// extension it defines is already contained in Q.
class RedundantExtension : public Error {
public:
    explicit RedundantExtension(const std::string& what) : Error(what) {}
};

/// Inversion met a zero divisor: the working minimal polynomial is
/// reducible. Carries the discovered factor so the caller can restart
/// with a correct field.
class NonInvertible : public Error {
public:
    NonInvertible(const std::string& what, std::string factor)
        : Error(what), factor_(std::move(factor)) {}
    const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

/// Polynomial division left a nonzero remainder where an exact quotient
/// was required.
class InexactDivision : public Error {
public:
    explicit InexactDivision(const std::string& what) : Error(what) {}
};

/// A series is zero in all computed terms but carries a finite
/// truncation, so its valuation cannot be certified. The caller must
/// recompute upstream at higher truncation.
class IndeterminateValuation : public Error {
public:
    explicit IndeterminateValuation(const std::string& what) : Error(what) {}
};

/// Residue requested for an element of negative valuation.
class NotInValuationRing : public Error {
public:
    explicit NotInValuationRing(const std::string& what) : Error(what) {}
};

/// A computation needs a root that does not exist in the current base
/// field. Carries the offending univariate polynomial (in t) so the run
/// can be repeated over an extended field.
class RequiresExtension : public Error {
public:
    RequiresExtension(const std::string& what, std::string minpoly)
        : Error(what), minpoly_(std::move(minpoly)) {}
    const std::string& minpoly() const { return minpoly_; }

private:
    std::string minpoly_;
};

/// Adaptive precision hit the configured cap without reaching a
/// determinate answer.
class TruncationInsufficient : public Error {
public:
    explicit TruncationInsufficient(const std::string& what) : Error(what) {}
};

/// Two curves share a component of positive degree; intersection
/// multiplicities are undefined.
class CommonComponent : public Error {
public:
    explicit CommonComponent(const std::string& what) : Error(what) {}
};

/// An intersection point exists over the algebraic closure but not over
/// the current base field. Carries the factor with no root in the field.
class UnrepresentablePoint : public Error {
public:
    UnrepresentablePoint(const std::string& what, std::string factor)
        : Error(what), factor_(std::move(factor)) {}
    const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

/// No coordinate frame satisfying the genericity conditions was found
/// within the retry budget.
class DegenerateCoordinates : public Error {
public:
    explicit DegenerateCoordinates(const std::string& what) : Error(what) {}
};

/// Branch counts disagreed across seeds even after re-seeding.
class NondeterministicCount : public Error {
public:
    explicit NondeterministicCount(const std::string& what) : Error(what) {}
};

/// A duality self-test found a violating element. Carries its text form.
class CounterexampleFound : public Error {
public:
    CounterexampleFound(const std::string& what, std::string element)
        : Error(what), element_(std::move(element)) {}
    const std::string& element() const { return element_; }

private:
    std::string element_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// A curve expression mixes monomials of different total degree.
class NotHomogeneous : public Error {
public:
    explicit NotHomogeneous(const std::string& what) : Error(what) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

} // namespace valcurve

#endif
