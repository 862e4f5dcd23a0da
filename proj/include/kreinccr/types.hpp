#ifndef KREINCCR_TYPES_HPP
#define KREINCCR_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>

namespace kreinccr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Exact rational used for level labels and oracle values.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Which self-adjoint generator a check is run for: q = (a + a^+)/sqrt2 or
// p = (a - a^+)/(i sqrt2).
enum class Generator { Q, P };

// Shape or lattice violations, bad parameters.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised instead of returning results whose precision has been destroyed.
class ConditioningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical certificate could not be established within the depth guard.
class InconclusiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "p/q" with q > 0 always present.
std::string to_string(const Rational& r);
// Accepts "p/q", "p" and decimal-free integers; throws DomainError otherwise.
Rational parse_rational(const std::string& text);
double to_double(const Rational& r);

}  // namespace kreinccr

#endif  // KREINCCR_TYPES_HPP
