#ifndef KREINCCR_NAIMARK_CHECKER_HPP
#define KREINCCR_NAIMARK_CHECKER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "kreinccr/representations.hpp"
#include "kreinccr/types.hpp"

namespace kreinccr::naimark {

/*
 * Resolvent-type operator A = I - i (n sqrt2)^{-1} G with
 *   G = a - a^*          for Generator::Q
 *   G = -i (a + a^*)     for Generator::P
 * where a^* is the conjugate transpose. G is obtained from sqrt2 q (resp.
 * sqrt2 p) by the anti-Fock substitution a^+ -> -a^*.
 *
 * The real/imaginary split K1 + K2 is taken literally for Q. For P the same
 * split is rotated by R = diag(i^k): R^* (a + a^*) R = i (a - a^*), so the P
 * checks on R K1 are the Q checks on K1.
 */

enum class Subspace { Real, Imaginary };

ComplexMatrix generator_core(const Representation& rep, Generator gen = Generator::Q);

// Throws DomainError for n == 0.
ComplexMatrix build_A(const Representation& rep, int n, Generator gen = Generator::Q);

// True when psi lies in the requested subspace (exact test, no tolerance).
bool conforms(const ComplexVector& psi, Subspace subspace, Generator gen = Generator::Q);

// ||A psi|| / ||psi||. Rejects zero and non-conforming psi with DomainError.
double lower_bound_ratio(const Representation& rep, int n, const ComplexVector& psi, Subspace subspace,
                         Generator gen = Generator::Q);

// (G psi, psi) in the positive product.
Complex cross_term(const Representation& rep, const ComplexVector& psi, Generator gen = Generator::Q);

// |cross_term| / (||psi||^2 ||G||).
double scaled_cross_term(const Representation& rep, const ComplexVector& psi, Generator gen = Generator::Q);

/*
 * max over seeded samples x in the subspace of ||A^{-m} psi|| / ||psi|| with
 * psi = A^m x, the inverse applied by m successive solves. A is tridiagonal;
 * products and solves run in quad precision, since A^m x loses the components
 * along small singular directions of A in double. Samples have independent
 * uniform [-1, 1] coefficients (times i for Imaginary, times R for P).
 * Throws ConditioningError when A^m is singular at quad precision.
 */
double resolvent_power_bound(const Representation& rep, int n, int m, int samples, std::uint64_t seed,
                             Subspace subspace = Subspace::Real, Generator gen = Generator::Q);

// Same ratio for one given x in the subspace.
double resolvent_power_ratio(const Representation& rep, int n, int m, const ComplexVector& x,
                             Generator gen = Generator::Q);

// Smallest singular value of A on the full complex window. Diagnostic only.
double full_space_sigma_min(const Representation& rep, int n, Generator gen = Generator::Q);

// Reproducible sample vector; same (seed, index) gives the same vector.
ComplexVector sample_vector(std::size_t dim, Subspace subspace, Generator gen, std::uint64_t seed, int index);

struct NaimarkReport {
    int n = 0;
    std::size_t dim = 0;
    double min_ratio_real = 0.0;
    double min_ratio_imag = 0.0;
    double max_cross_term = 0.0;  // max of the two below
    double max_cross_term_real = 0.0;
    double max_cross_term_imag = 0.0;
    std::vector<std::pair<int, double>> resolvent_power_bounds;
    double full_space_sigma_min = 0.0;
};

NaimarkReport check(const Representation& rep, int n, int samples, std::uint64_t seed, int max_m,
                    Generator gen = Generator::Q);

}  // namespace kreinccr::naimark

#endif  // KREINCCR_NAIMARK_CHECKER_HPP
