#include "kreinccr/representations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kreinccr/exact_oracle.hpp"

namespace kreinccr {

namespace {

bool ascending(const RepKind& kind)
{
    return !kind.is_anti_fock();
}

// (S M S)(i, j) with S = diag(sign_of(i)); zeros are left untouched.
template <typename SignFn>
ComplexMatrix conjugate_by_signs(const ComplexMatrix& m, SignFn sign_of)
{
    ComplexMatrix out = m;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (m(i, j) != Complex(0.0) && sign_of(i) * sign_of(j) < 0) out(i, j) = -m(i, j);
        }
    }
    return out;
}

ComplexMatrix negate_nonzero(const ComplexMatrix& m)
{
    return m.unaryExpr([](const Complex& z) { return z == Complex(0.0) ? z : -z; });
}

int alternating(Eigen::Index i)
{
    return i % 2 == 0 ? 1 : -1;
}

ComplexMatrix signature_matrix(const KreinStructure& ks)
{
    const auto n = static_cast<Eigen::Index>(ks.dim());
    ComplexMatrix j = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) j(k, k) = static_cast<double>(ks[static_cast<std::size_t>(k)]);
    return j;
}

ComplexMatrix principal_block(const ComplexMatrix& m, const std::vector<std::size_t>& idx)
{
    const auto n = static_cast<Eigen::Index>(idx.size());
    ComplexMatrix out(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            out(r, c) = m(static_cast<Eigen::Index>(idx[r]), static_cast<Eigen::Index>(idx[c]));
        }
    }
    return out;
}

AdjointReport adjoint_report(const ComplexMatrix& a, const ComplexMatrix& a_dag, const KreinStructure& ks)
{
    const ComplexMatrix j = signature_matrix(ks);
    return {
        spectral_norm(a_dag - krein_adjoint(a, ks)),
        spectral_norm(a * j + j * a),
        spectral_norm(a_dag * j + j * a_dag),
        spectral_norm(a_dag + a.adjoint()),
    };
}

}  // namespace

std::size_t Representation::index_of(const Rational& level) const
{
    const Rational diff = ascending(kind) ? Rational(level - levels.front()) : Rational(levels.front() - level);
    if (denominator(diff) != 1 || diff < 0 || diff >= static_cast<long long>(levels.size())) {
        throw DomainError("level " + to_string(level) + " is outside the representation window");
    }
    return numerator(diff).convert_to<std::size_t>();
}

double ladder_magnitude(const Rational& upper_level)
{
    return std::sqrt(to_double(abs(upper_level)));
}

Representation build(const RepKind& kind, std::size_t dim, std::size_t negative_window)
{
    if (dim < 2) throw DomainError("build: dim must be >= 2");
    if (dim > static_cast<std::size_t>(std::numeric_limits<int>::max())) throw DomainError("build: dim too large");

    std::vector<Rational> levels(dim);
    switch (kind.tag()) {
    case RepKind::Tag::Fock:
        for (std::size_t i = 0; i < dim; ++i) levels[i] = Rational(static_cast<long long>(i));
        break;
    case RepKind::Tag::AntiFock:
        for (std::size_t i = 0; i < dim; ++i) levels[i] = Rational(-static_cast<long long>(i) - 1);
        break;
    case RepKind::Tag::Lambda:
        if (negative_window >= dim) throw DomainError("build: negative_window must be < dim");
        for (std::size_t i = 0; i < dim; ++i) {
            levels[i] = kind.lambda0() + (static_cast<long long>(i) - static_cast<long long>(negative_window));
        }
        break;
    }

    std::vector<int> signature(dim);
    for (std::size_t i = 0; i < dim; ++i) signature[i] = exact::signature(kind, levels[i]);

    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    ComplexMatrix a_dag = ComplexMatrix::Zero(n, n);
    // Consecutive indices hold adjacent levels; `upper` is the higher one.
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        const Eigen::Index upper = ascending(kind) ? i + 1 : i;
        const Eigen::Index lower = ascending(kind) ? i : i + 1;
        const Rational& level = levels[static_cast<std::size_t>(upper)];
        const double magnitude = ladder_magnitude(level);
        a(lower, upper) = magnitude;
        a_dag(upper, lower) = level < 0 ? -magnitude : magnitude;
    }

    return Representation{kind, std::move(levels), std::move(a), std::move(a_dag), KreinStructure(std::move(signature))};
}

std::vector<std::size_t> boundary_indices(const Representation& rep)
{
    const auto [lo, hi] = std::minmax_element(rep.levels.begin(), rep.levels.end());
    std::vector<std::size_t> out;
    if (rep.kind.contains(*lo - 1)) out.push_back(static_cast<std::size_t>(lo - rep.levels.begin()));
    if (rep.kind.contains(*hi + 1)) out.push_back(static_cast<std::size_t>(hi - rep.levels.begin()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> interior_indices(const Representation& rep)
{
    const auto boundary = boundary_indices(rep);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rep.dim(); ++i) {
        if (std::find(boundary.begin(), boundary.end(), i) == boundary.end()) out.push_back(i);
    }
    return out;
}

std::vector<double> level_spectrum(const Representation& rep)
{
    const ComplexMatrix n_op = rep.a_dag * rep.a;
    const ComplexMatrix anti_ordered = rep.a * rep.a_dag;
    const auto lo = std::min_element(rep.levels.begin(), rep.levels.end());
    const auto cut_bottom = rep.kind.contains(*lo - 1) ? static_cast<Eigen::Index>(lo - rep.levels.begin()) : -1;

    std::vector<double> out(rep.dim());
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(rep.dim()); ++i) {
        out[static_cast<std::size_t>(i)] = i == cut_bottom ? anti_ordered(i, i).real() - 1.0 : n_op(i, i).real();
    }
    return out;
}

ComplexMatrix commutator_defect(const Representation& rep)
{
    const auto n = static_cast<Eigen::Index>(rep.dim());
    return rep.a * rep.a_dag - rep.a_dag * rep.a - ComplexMatrix::Identity(n, n);
}

AdjointReport check_adjoint_relations(const Representation& rep)
{
    return adjoint_report(rep.a, rep.a_dag, rep.ks);
}

AdjointReport check_adjoint_relations(const Representation& rep, const std::vector<std::size_t>& indices)
{
    if (indices.empty()) throw DomainError("check_adjoint_relations: empty index set");
    std::vector<int> sig;
    for (std::size_t i : indices) {
        if (i >= rep.dim()) throw DomainError("check_adjoint_relations: index out of range");
        sig.push_back(rep.ks[i]);
    }
    return adjoint_report(principal_block(rep.a, indices), principal_block(rep.a_dag, indices),
                          KreinStructure(std::move(sig)));
}

std::vector<std::size_t> negative_level_indices(const Representation& rep)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rep.dim(); ++i) {
        if (rep.levels[i] < 0) out.push_back(i);
    }
    return out;
}

AntiFockPair anti_fock_pair(const Representation& rep)
{
    if (!rep.kind.is_anti_fock()) throw DomainError("anti_fock_pair: representation is not anti-Fock");
    return {rep.a_dag, krein_adjoint(rep.a_dag, rep.ks), rep.a_dag.adjoint()};
}

Representation antifock_to_fock(const Representation& rep)
{
    if (!rep.kind.is_anti_fock()) throw DomainError("antifock_to_fock: representation is not anti-Fock");
    const AntiFockPair pair = anti_fock_pair(rep);
    std::vector<Rational> levels(rep.dim());
    for (std::size_t i = 0; i < rep.dim(); ++i) levels[i] = -rep.levels[i] - 1;
    return Representation{RepKind::fock(), std::move(levels), conjugate_by_signs(pair.b, alternating),
                          conjugate_by_signs(pair.b_star, alternating), KreinStructure::positive(rep.dim())};
}

Representation fock_to_antifock(const Representation& rep)
{
    if (!rep.kind.is_fock()) throw DomainError("fock_to_antifock: representation is not Fock");
    const RepKind kind = RepKind::anti_fock();
    std::vector<Rational> levels(rep.dim());
    std::vector<int> signature(rep.dim());
    for (std::size_t i = 0; i < rep.dim(); ++i) {
        levels[i] = -rep.levels[i] - 1;
        signature[i] = exact::signature(kind, levels[i]);
    }
    // b = D a_F D is the anti-Fock a^+, and a = -b^* = -D a_F^* D.
    ComplexMatrix b = conjugate_by_signs(rep.a, alternating);
    ComplexMatrix b_star = conjugate_by_signs(rep.a_dag, alternating);
    return Representation{kind, std::move(levels), negate_nonzero(b_star), std::move(b), KreinStructure(std::move(signature))};
}

double psi_to_e_scale(const RepKind& kind, const Rational& level)
{
    const Rational value = exact::psi_norm_sq(kind, level);
    if (exact::log_abs(value) > std::log(std::numeric_limits<double>::max())) {
        throw std::overflow_error("psi_to_e_scale: normalization of level " + to_string(level) +
                                  " exceeds double range");
    }
    return std::sqrt(to_double(abs(value)));
}

double log_psi_to_e_scale(const RepKind& kind, const Rational& level)
{
    return 0.5 * exact::log_abs(exact::psi_norm_sq(kind, level));
}

}  // namespace kreinccr
