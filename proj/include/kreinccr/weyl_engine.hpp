#ifndef KREINCCR_WEYL_ENGINE_HPP
#define KREINCCR_WEYL_ENGINE_HPP

#include <cstddef>

#include "kreinccr/representations.hpp"
#include "kreinccr/types.hpp"

namespace kreinccr::weyl {

// Largest growth exponent accepted for e^{M}: the log-norm of the generator,
// |t| sigma_max(q) for the anti-Fock q. e^30 ~ 1e13.
inline constexpr double kGrowthGuard = 30.0;

// matrix_exp rejects inputs with ||M||_1 beyond this.
inline constexpr double kExpNormGuard = 700.0;

struct PositionMomentum {
    ComplexMatrix q;  // (a + a^+) / sqrt2
    ComplexMatrix p;  // (a - a^+) / (i sqrt2)
};

PositionMomentum build_pq(const Representation& rep);

// Scaling and squaring with a Pade core. Throws DomainError for non-finite or
// non-square input and ConditioningError past kExpNormGuard.
ComplexMatrix matrix_exp(const ComplexMatrix& m);

// Largest eigenvalue of the Hermitian part of m: ||e^{m}|| <= e^{growth}.
double growth_exponent(const ComplexMatrix& m);

struct WeylPair {
    ComplexMatrix U;  // e^{i t p}
    ComplexMatrix V;  // e^{i s q}
    double t;
    double s;
};

// Throws ConditioningError when either generator exceeds kGrowthGuard.
WeylPair weyl_operators(const Representation& rep, double t, double s);

// ||(U V - e^{ist} V U) e_mode|| / (||U|| ||V||).
double weyl_residual(const Representation& rep, double t, double s, std::size_t mode);
double weyl_residual(const Representation& rep, const WeylPair& pair, std::size_t mode);

// ||U^+ U - I|| / ||U||^2 with U = U(t) and U^+ its Krein adjoint.
double j_unitarity_defect(const Representation& rep, double t);

// ||U(t1 + t2) - U(t1) U(t2)|| / (||U(t1)|| ||U(t2)||).
double group_law_defect(const Representation& rep, double t1, double t2);

}  // namespace kreinccr::weyl

#endif  // KREINCCR_WEYL_ENGINE_HPP
