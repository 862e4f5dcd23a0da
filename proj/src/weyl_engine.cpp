#include "kreinccr/weyl_engine.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace kreinccr::weyl {

namespace {

constexpr Complex kI{0.0, 1.0};

// sigma_max of the Hermitian part of i*g: ||e^{i tau g}|| <= e^{|tau| rate}.
double growth_rate(const ComplexMatrix& g)
{
    const ComplexMatrix ig = kI * g;
    const ComplexMatrix herm = 0.5 * (ig + ig.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm, Eigen::EigenvaluesOnly);
    const auto& ev = eig.eigenvalues();
    return std::max(std::fabs(ev(0)), std::fabs(ev(ev.size() - 1)));
}

void guard(double tau, double rate, const char* what)
{
    const double growth = std::fabs(tau) * rate;
    if (growth > kGrowthGuard) {
        throw ConditioningError(std::string(what) + ": growth exponent " + std::to_string(growth) +
                                " exceeds guard " + std::to_string(kGrowthGuard));
    }
}

ComplexMatrix exp_i(double tau, const ComplexMatrix& g)
{
    return matrix_exp(Complex(0.0, tau) * g);
}

}  // namespace

PositionMomentum build_pq(const Representation& rep)
{
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix q = (rep.a + rep.a_dag) * inv_sqrt2;
    ComplexMatrix p = ((rep.a - rep.a_dag) * inv_sqrt2) * Complex(0.0, -1.0);
    return {std::move(q), std::move(p)};
}

ComplexMatrix matrix_exp(const ComplexMatrix& m)
{
    if (m.rows() != m.cols()) throw DomainError("matrix_exp: matrix is not square");
    if (!m.allFinite()) throw DomainError("matrix_exp: non-finite entries");
    const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
    if (norm1 > kExpNormGuard) {
        throw ConditioningError("matrix_exp: ||M||_1 = " + std::to_string(norm1) + " exceeds guard " +
                                std::to_string(kExpNormGuard));
    }
    ComplexMatrix out = m.exp();
    if (!out.allFinite()) throw ConditioningError("matrix_exp: result overflowed");
    return out;
}

double growth_exponent(const ComplexMatrix& m)
{
    const ComplexMatrix herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm, Eigen::EigenvaluesOnly);
    return eig.eigenvalues()(eig.eigenvalues().size() - 1);
}

WeylPair weyl_operators(const Representation& rep, double t, double s)
{
    const PositionMomentum pq = build_pq(rep);
    guard(t, growth_rate(pq.p), "weyl_operators U(t)");
    guard(s, growth_rate(pq.q), "weyl_operators V(s)");
    return {exp_i(t, pq.p), exp_i(s, pq.q), t, s};
}

double weyl_residual(const Representation& rep, const WeylPair& pair, std::size_t mode)
{
    if (mode >= rep.dim()) throw DomainError("weyl_residual: mode index out of range");
    const auto col = static_cast<Eigen::Index>(mode);
    const ComplexVector uv = pair.U * pair.V.col(col);
    const ComplexVector vu = pair.V * pair.U.col(col);
    const Complex phase = std::exp(Complex(0.0, pair.s * pair.t));
    return (uv - phase * vu).norm() / (spectral_norm(pair.U) * spectral_norm(pair.V));
}

double weyl_residual(const Representation& rep, double t, double s, std::size_t mode)
{
    if (mode >= rep.dim()) throw DomainError("weyl_residual: mode index out of range");
    return weyl_residual(rep, weyl_operators(rep, t, s), mode);
}

double j_unitarity_defect(const Representation& rep, double t)
{
    const PositionMomentum pq = build_pq(rep);
    guard(t, growth_rate(pq.p), "j_unitarity_defect");
    const ComplexMatrix u = exp_i(t, pq.p);
    const auto n = static_cast<Eigen::Index>(rep.dim());
    const double norm_u = spectral_norm(u);
    return spectral_norm(krein_adjoint(u, rep.ks) * u - ComplexMatrix::Identity(n, n)) / (norm_u * norm_u);
}

double group_law_defect(const Representation& rep, double t1, double t2)
{
    const PositionMomentum pq = build_pq(rep);
    guard(std::fabs(t1) + std::fabs(t2), growth_rate(pq.p), "group_law_defect");
    const ComplexMatrix u1 = exp_i(t1, pq.p);
    const ComplexMatrix u2 = exp_i(t2, pq.p);
    const ComplexMatrix u12 = exp_i(t1 + t2, pq.p);
    return spectral_norm(u12 - u1 * u2) / (spectral_norm(u1) * spectral_norm(u2));
}

}  // namespace kreinccr::weyl
