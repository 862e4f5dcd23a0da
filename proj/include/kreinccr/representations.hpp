#ifndef KREINCCR_REPRESENTATIONS_HPP
#define KREINCCR_REPRESENTATIONS_HPP

#include <cstddef>
#include <vector>

#include "kreinccr/krein_core.hpp"
#include "kreinccr/rep_kind.hpp"
#include "kreinccr/types.hpp"

namespace kreinccr {

/*
 * Finite window of a CCR representation in its normalized eigenbasis e_l.
 *
 * Basis index i carries N-eigenvalue levels[i]. Window ordering:
 *   Fock      0, 1, ..., dim-1
 *   AntiFock  -1, -2, ..., -dim
 *   Lambda    l0-w, ..., l0, ..., l0+(dim-1-w)     (w = negative window)
 *
 * Ladder rule, for adjacent levels l-1, l inside the window:
 *   a   e_l     = sqrt|l|         e_{l-1}
 *   a^+ e_{l-1} = sign(l) sqrt|l| e_l
 * All entries of `a` are real and non-negative; the sign lives in a^+.
 * The truncation cuts the ladder at the window edges, so [a, a^+] = 1 fails
 * on boundary indices only (see boundary_indices).
 */
struct Representation {
    RepKind kind;
    std::vector<Rational> levels;
    ComplexMatrix a;
    ComplexMatrix a_dag;
    KreinStructure ks;

    std::size_t dim() const { return levels.size(); }
    // Throws DomainError when the level is not in the window.
    std::size_t index_of(const Rational& level) const;
};

// negative_window is only read for Lambda, where it must be < dim.
Representation build(const RepKind& kind, std::size_t dim, std::size_t negative_window = 0);

// Indices whose ladder neighbour exists on the infinite lattice but was cut
// by the window. Fock: the top. AntiFock: the bottom. Lambda: both ends.
std::vector<std::size_t> boundary_indices(const Representation& rep);
std::vector<std::size_t> interior_indices(const Representation& rep);

// Numerical N-eigenvalue for every index, in window order. Uses diag(a^+ a),
// except at a truncated bottom where a e_l = 0 was forced; there the CCR form
// a a^+ - 1 is read instead.
std::vector<double> level_spectrum(const Representation& rep);

// [a, a^+] - I.
ComplexMatrix commutator_defect(const Representation& rep);

struct AdjointReport {
    double krein_adjoint_defect;      // ||a^+ - J a^* J||
    double anticommutator_defect;     // ||{a, J}||
    double anticommutator_dag_defect; // ||{a^+, J}||
    double conjugation_defect;        // ||a^+ + a^*||
};

AdjointReport check_adjoint_relations(const Representation& rep);
// Same norms on the principal sub-block spanned by `indices`.
AdjointReport check_adjoint_relations(const Representation& rep, const std::vector<std::size_t>& indices);

// Indices whose level is strictly negative.
std::vector<std::size_t> negative_level_indices(const Representation& rep);

// The anti-Fock pair rewritten as a Fock one: b = a^+, b^* = J b^+ J = -a.
struct AntiFockPair {
    ComplexMatrix b;             // a^+
    ComplexMatrix b_krein_adj;   // Krein adjoint of b, i.e. a
    ComplexMatrix b_star;        // positive-metric adjoint of b, -a
};
AntiFockPair anti_fock_pair(const Representation& rep);

/*
 * Maps an anti-Fock window to the Fock window of the same dim.
 *
 * Level -k is relabeled k-1 (index i stays index i) and the basis vector
 * picks up the phase (-1)^i. In that basis the lowering operator b = a^+
 * becomes the standard Fock a and b^* = -a becomes its adjoint, so the output
 * equals build(Fock, dim) entry for entry.
 */
Representation antifock_to_fock(const Representation& rep);
// Inverse relabeling; fock_to_antifock(antifock_to_fock(r)) == r bit for bit.
Representation fock_to_antifock(const Representation& rep);

// sqrt|<psi_l, psi_l>|, so that e_l = psi_l / scale has <e_l, e_l> = +/-1.
// Throws std::overflow_error when the value leaves double range.
double psi_to_e_scale(const RepKind& kind, const Rational& level);
// log of the same quantity, for levels where the scale overflows.
double log_psi_to_e_scale(const RepKind& kind, const Rational& level);

// sqrt|l| as used for every ladder entry whose upper level is l.
double ladder_magnitude(const Rational& upper_level);

}  // namespace kreinccr

#endif  // KREINCCR_REPRESENTATIONS_HPP
