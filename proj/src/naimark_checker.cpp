#include "kreinccr/naimark_checker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

namespace kreinccr::naimark {

namespace {

// z * i^power, exact (component swaps and sign flips only).
Complex times_i_power(Complex z, long long power)
{
    switch (((power % 4) + 4) % 4) {
    case 0: return z;
    case 1: return {-z.imag(), z.real()};
    case 2: return {-z.real(), -z.imag()};
    default: return {z.imag(), -z.real()};
    }
}

// R^* psi with R = diag(i^k).
ComplexVector unrotate(const ComplexVector& psi)
{
    ComplexVector out(psi.size());
    for (Eigen::Index k = 0; k < psi.size(); ++k) out[k] = times_i_power(psi[k], -k);
    return out;
}

void require_nonzero(const ComplexVector& psi, const char* what)
{
    if (psi.size() == 0 || psi.isZero(0.0)) throw DomainError(std::string(what) + ": zero vector");
}

void require_dim(const Representation& rep, const ComplexVector& psi, const char* what)
{
    if (static_cast<std::size_t>(psi.size()) != rep.dim()) {
        throw DomainError(std::string(what) + ": vector dimension does not match representation");
    }
}

using QComplex = boost::multiprecision::complex128;
using QVector = std::vector<QComplex>;

// A is tridiagonal because a only couples neighbouring levels.
struct Tridiagonal {
    QVector dl, d, du;

    explicit Tridiagonal(const ComplexMatrix& a)
    {
        const Eigen::Index n = a.rows();
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                if (std::abs(i - j) > 1 && a(i, j) != 0.0) throw std::logic_error("resolvent: A is not tridiagonal");
            }
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            d.emplace_back(a(i, i).real(), a(i, i).imag());
            if (i + 1 < n) {
                dl.emplace_back(a(i + 1, i).real(), a(i + 1, i).imag());
                du.emplace_back(a(i, i + 1).real(), a(i, i + 1).imag());
            }
        }
    }

    QVector multiply(const QVector& x) const
    {
        const std::size_t n = d.size();
        QVector y(n);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = d[i] * x[i];
            if (i > 0) y[i] += dl[i - 1] * x[i - 1];
            if (i + 1 < n) y[i] += du[i] * x[i + 1];
        }
        return y;
    }
};

// Tridiagonal LU with partial pivoting (the gttrf/gttrs scheme) in quad precision.
class TridiagonalLU {
public:
    explicit TridiagonalLU(Tridiagonal t) : dl_(std::move(t.dl)), d_(std::move(t.d)), du_(std::move(t.du))
    {
        const std::size_t n = d_.size();
        du2_.assign(n > 2 ? n - 2 : 0, QComplex(0));
        swapped_.assign(n > 0 ? n - 1 : 0, false);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (cabs1(d_[i]) >= cabs1(dl_[i])) {
                if (cabs1(d_[i]) != 0) {
                    const QComplex fact = dl_[i] / d_[i];
                    dl_[i] = fact;
                    d_[i + 1] -= fact * du_[i];
                }
            } else {
                const QComplex fact = d_[i] / dl_[i];
                d_[i] = dl_[i];
                dl_[i] = fact;
                const QComplex temp = du_[i];
                du_[i] = d_[i + 1];
                d_[i + 1] = temp - fact * d_[i + 1];
                if (i + 2 < n) {
                    du2_[i] = du_[i + 1];
                    du_[i + 1] = -fact * du_[i + 1];
                }
                swapped_[i] = true;
            }
        }
        for (const auto& p : d_) {
            if (cabs1(p) == 0) throw ConditioningError("resolvent: A is singular (zero pivot)");
            inv_d_.push_back(QComplex(1) / p);
        }
    }

    void solve(QVector& b) const
    {
        const std::size_t n = d_.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (!swapped_[i]) {
                b[i + 1] -= dl_[i] * b[i];
            } else {
                const QComplex temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - dl_[i] * b[i];
            }
        }
        for (std::size_t k = n; k-- > 0;) {
            QComplex v = b[k];
            if (k + 1 < n) v -= du_[k] * b[k + 1];
            if (k + 2 < n) v -= du2_[k] * b[k + 2];
            b[k] = v * inv_d_[k];
        }
    }

private:
    static boost::multiprecision::float128 cabs1(const QComplex& z) { return abs(z.real()) + abs(z.imag()); }

    QVector dl_, d_, du_, du2_, inv_d_;
    std::vector<bool> swapped_;
};

boost::multiprecision::float128 norm(const QVector& v)
{
    boost::multiprecision::float128 s = 0;
    for (const auto& z : v) s += z.real() * z.real() + z.imag() * z.imag();
    return sqrt(s);
}

// Quad precision loses about sigma_min^{-m} * eps_quad relative accuracy over
// m solves; refuse powers where that exceeds 1e-12.
void require_working_precision(const ComplexMatrix& a, int max_m)
{
    const double sigma = smallest_singular_value(a);
    const double log_eps = std::log(static_cast<double>(std::numeric_limits<boost::multiprecision::float128>::epsilon()));
    if (!(sigma > 0.0) || max_m * -std::log(sigma) + log_eps > std::log(1e-12)) {
        throw ConditioningError("resolvent: A^" + std::to_string(max_m) + " is singular at working precision (sigma_min " +
                                std::to_string(sigma) + ")");
    }
}

// ratios[m-1] = ||A^{-m} psi_m|| / ||psi_m|| with psi_m = A^m x, for m = 1..max_m.
std::vector<double> power_ratios(const Tridiagonal& a, const TridiagonalLU& lu, int max_m, const ComplexVector& x)
{
    QVector psi(static_cast<std::size_t>(x.size()));
    for (Eigen::Index k = 0; k < x.size(); ++k) psi[k] = QComplex(x[k].real(), x[k].imag());
    std::vector<double> ratios;
    for (int m = 1; m <= max_m; ++m) {
        psi = a.multiply(psi);
        QVector y = psi;
        for (int j = 0; j < m; ++j) lu.solve(y);
        const double r = static_cast<double>(norm(y) / norm(psi));
        if (!std::isfinite(r)) throw ConditioningError("resolvent: solve produced non-finite values");
        ratios.push_back(r);
    }
    return ratios;
}

}  // namespace

ComplexMatrix generator_core(const Representation& rep, Generator gen)
{
    if (gen == Generator::Q) return rep.a - rep.a.adjoint();
    return (rep.a + rep.a.adjoint()) * Complex(0.0, -1.0);
}

ComplexMatrix build_A(const Representation& rep, int n, Generator gen)
{
    if (n == 0) throw DomainError("build_A: n must be nonzero");
    const auto dim = static_cast<Eigen::Index>(rep.dim());
    const Complex coeff(0.0, -1.0 / (n * std::sqrt(2.0)));
    return ComplexMatrix::Identity(dim, dim) + coeff * generator_core(rep, gen);
}

bool conforms(const ComplexVector& psi, Subspace subspace, Generator gen)
{
    const ComplexVector y = gen == Generator::Q ? psi : unrotate(psi);
    for (Eigen::Index k = 0; k < y.size(); ++k) {
        if (subspace == Subspace::Real && y[k].imag() != 0.0) return false;
        if (subspace == Subspace::Imaginary && y[k].real() != 0.0) return false;
    }
    return true;
}

double lower_bound_ratio(const Representation& rep, int n, const ComplexVector& psi, Subspace subspace,
                         Generator gen)
{
    require_dim(rep, psi, "lower_bound_ratio");
    require_nonzero(psi, "lower_bound_ratio");
    if (!conforms(psi, subspace, gen)) {
        throw DomainError("lower_bound_ratio: vector mixes real and imaginary parts for the requested subspace");
    }
    return (build_A(rep, n, gen) * psi).norm() / psi.norm();
}

Complex cross_term(const Representation& rep, const ComplexVector& psi, Generator gen)
{
    require_dim(rep, psi, "cross_term");
    require_nonzero(psi, "cross_term");
    return psi.dot(generator_core(rep, gen) * psi);
}

double scaled_cross_term(const Representation& rep, const ComplexVector& psi, Generator gen)
{
    const double scale = psi.squaredNorm() * spectral_norm(generator_core(rep, gen));
    return std::abs(cross_term(rep, psi, gen)) / scale;
}

ComplexVector sample_vector(std::size_t dim, Subspace subspace, Generator gen, std::uint64_t seed, int index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    ComplexVector x(static_cast<Eigen::Index>(dim));
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        const double c = coeff(rng);
        Complex z = subspace == Subspace::Real ? Complex(c, 0.0) : Complex(0.0, c);
        if (gen == Generator::P) z = times_i_power(z, k);
        x[k] = z;
    }
    return x;
}

double resolvent_power_ratio(const Representation& rep, int n, int m, const ComplexVector& x, Generator gen)
{
    require_dim(rep, x, "resolvent_power_ratio");
    require_nonzero(x, "resolvent_power_ratio");
    if (m < 1) throw DomainError("resolvent_power_ratio: m must be >= 1");
    const ComplexMatrix a = build_A(rep, n, gen);
    require_working_precision(a, m);
    const Tridiagonal t(a);
    return power_ratios(t, TridiagonalLU(t), m, x).back();
}

double resolvent_power_bound(const Representation& rep, int n, int m, int samples, std::uint64_t seed,
                             Subspace subspace, Generator gen)
{
    if (m < 1) throw DomainError("resolvent_power_bound: m must be >= 1");
    if (samples < 1) throw DomainError("resolvent_power_bound: samples must be >= 1");
    const ComplexMatrix a = build_A(rep, n, gen);
    require_working_precision(a, m);
    const Tridiagonal t(a);
    const TridiagonalLU lu(t);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        worst = std::max(worst, power_ratios(t, lu, m, sample_vector(rep.dim(), subspace, gen, seed, i)).back());
    }
    return worst;
}

double full_space_sigma_min(const Representation& rep, int n, Generator gen)
{
    return smallest_singular_value(build_A(rep, n, gen));
}

NaimarkReport check(const Representation& rep, int n, int samples, std::uint64_t seed, int max_m, Generator gen)
{
    if (samples < 1) throw DomainError("naimark check: samples must be >= 1");
    NaimarkReport report;
    report.n = n;
    report.dim = rep.dim();

    const ComplexMatrix a = build_A(rep, n, gen);
    const ComplexMatrix g = generator_core(rep, gen);
    const double g_norm = spectral_norm(g);

    report.min_ratio_real = std::numeric_limits<double>::infinity();
    report.min_ratio_imag = std::numeric_limits<double>::infinity();
    for (Subspace sub : {Subspace::Real, Subspace::Imaginary}) {
        double& min_ratio = sub == Subspace::Real ? report.min_ratio_real : report.min_ratio_imag;
        double& max_cross = sub == Subspace::Real ? report.max_cross_term_real : report.max_cross_term_imag;
        for (int i = 0; i < samples; ++i) {
            const ComplexVector psi = sample_vector(rep.dim(), sub, gen, seed, i);
            min_ratio = std::min(min_ratio, (a * psi).norm() / psi.norm());
            const double cross = std::abs(psi.dot(g * psi)) / (psi.squaredNorm() * g_norm);
            max_cross = std::max(max_cross, cross);
        }
    }

    report.max_cross_term = std::max(report.max_cross_term_real, report.max_cross_term_imag);

    if (max_m >= 1) {
        require_working_precision(a, max_m);
        const Tridiagonal t(a);
        const TridiagonalLU lu(t);
        std::vector<double> worst(static_cast<std::size_t>(max_m), 0.0);
        for (Subspace sub : {Subspace::Real, Subspace::Imaginary}) {
            for (int i = 0; i < samples; ++i) {
                const auto ratios = power_ratios(t, lu, max_m, sample_vector(rep.dim(), sub, gen, seed, i));
                for (std::size_t k = 0; k < ratios.size(); ++k) worst[k] = std::max(worst[k], ratios[k]);
            }
        }
        for (int m = 1; m <= max_m; ++m) report.resolvent_power_bounds.emplace_back(m, worst[m - 1]);
    }
    report.full_space_sigma_min = smallest_singular_value(a);
    return report;
}

}  // namespace kreinccr::naimark
