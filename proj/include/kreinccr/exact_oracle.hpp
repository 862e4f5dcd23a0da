#ifndef KREINCCR_EXACT_ORACLE_HPP
#define KREINCCR_EXACT_ORACLE_HPP

#include <vector>

#include "kreinccr/rep_kind.hpp"
#include "kreinccr/types.hpp"

// Exact rational ground truth for the unnormalized eigenvectors psi_lambda.
//
// Every value is produced by the ladder recursion from the anchor of the kind:
//   <psi_{l-1}, psi_{l-1}> = l     <psi_l, psi_l>
//   <psi_{l+1}, psi_{l+1}> = (l+1) <psi_l, psi_l>
// with <psi_anchor, psi_anchor> = 1. No floating point is used here.
namespace kreinccr::exact {

enum class Direction { Down, Up };

struct LadderCoefficient {
    Rational magnitude_sq;  // |l| with l the higher of the two levels
    int sign;               // +1 for a; sign(l) for a^+
};

Rational psi_norm_sq(const RepKind& kind, const Rational& level);

// Sign of psi_norm_sq; +1 or -1.
int signature(const RepKind& kind, const Rational& level);

// Coefficient of the step from_level -> from_level -/+ 1 in the normalized
// e-basis. Throws DomainError if either endpoint leaves the lattice.
LadderCoefficient ladder_coeff_sq(const RepKind& kind, const Rational& from_level, Direction direction);

struct AuditRow {
    Rational level;
    Rational recursion;
    Rational closed_form;
    bool match;
};

// Compares the recursion against the printed closed forms:
//   AntiFock  <psi_{-k}>       = (-1)^{k-1} (k-1)!                 k = 1..max_n
//   Lambda    <psi_{l0+n}>     = (l0+n+1)(l0+n)...(l0+1)           n = 1..max_n
//             <psi_{l0-n}>     = (l0-n+1)(l0-n+2)...l0             n = 1..max_n
//   Fock      <psi_n>          = n!                                n = 0..max_n
// Lambda rows list the positive side first, then the negative side.
// Mismatches are reported, not thrown.
std::vector<AuditRow> closed_form_audit(const RepKind& kind, int max_n);

// Natural log of |r| for r != 0, valid far outside double range.
double log_abs(const Rational& r);

BigInt factorial(unsigned n);

}  // namespace kreinccr::exact

#endif  // KREINCCR_EXACT_ORACLE_HPP
