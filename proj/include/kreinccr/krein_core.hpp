#ifndef KREINCCR_KREIN_CORE_HPP
#define KREINCCR_KREIN_CORE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "kreinccr/types.hpp"

namespace kreinccr {

/*
 * Diagonal fundamental decomposition of a finite-dimensional Krein space.
 *
 * Entry k of the signature is <e_k, e_k> in the orthonormal basis, so the
 * fundamental symmetry J is diag(signature). Neutral basis vectors are not
 * representable: every entry is +1 or -1.
 */
class KreinStructure {
public:
    explicit KreinStructure(std::vector<int> signature);

    // All +1; J = I and the indefinite product is the Hilbert one.
    static KreinStructure positive(std::size_t dim);

    std::size_t dim() const { return signature_.size(); }
    std::span<const int> signature() const { return signature_; }
    int operator[](std::size_t k) const { return signature_[k]; }

    // Entrywise masks realizing the projectors (I +/- J)/2.
    std::vector<bool> positive_mask() const;
    std::vector<bool> negative_mask() const;

    bool operator==(const KreinStructure&) const = default;

private:
    std::vector<int> signature_;
};

// <x, y> = sum_k eta_k x_k conj(y_k); conjugate-linear in y.
Complex indefinite_inner(const ComplexVector& x, const ComplexVector& y, const KreinStructure& ks);

// (x, y) = <x, J y> = sum_k x_k conj(y_k).
Complex positive_inner(const ComplexVector& x, const ComplexVector& y, const KreinStructure& ks);

// sqrt((x, x)).
double positive_norm(const ComplexVector& x);

ComplexVector apply_J(const ComplexVector& x, const KreinStructure& ks);

// A^+ = J A^* J.
ComplexMatrix krein_adjoint(const ComplexMatrix& a, const KreinStructure& ks);

// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

// Smallest singular value.
double smallest_singular_value(const ComplexMatrix& m);

}  // namespace kreinccr

#endif  // KREINCCR_KREIN_CORE_HPP
