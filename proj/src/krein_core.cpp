#include "kreinccr/krein_core.hpp"

#include <string>

namespace kreinccr {

namespace {

void require_dim(Eigen::Index n, const KreinStructure& ks, const char* what)
{
    if (static_cast<std::size_t>(n) != ks.dim()) {
        throw DomainError(std::string(what) + ": dimension " + std::to_string(n) +
                          " does not match Krein structure of dimension " + std::to_string(ks.dim()));
    }
}

}  // namespace

KreinStructure::KreinStructure(std::vector<int> signature) : signature_(std::move(signature))
{
    if (signature_.empty()) throw DomainError("KreinStructure: dim must be >= 1");
    for (int s : signature_) {
        if (s != 1 && s != -1) throw DomainError("KreinStructure: signature entries must be +1 or -1");
    }
}

KreinStructure KreinStructure::positive(std::size_t dim)
{
    return KreinStructure(std::vector<int>(dim, 1));
}

std::vector<bool> KreinStructure::positive_mask() const
{
    std::vector<bool> mask(signature_.size());
    for (std::size_t k = 0; k < signature_.size(); ++k) mask[k] = signature_[k] > 0;
    return mask;
}

std::vector<bool> KreinStructure::negative_mask() const
{
    std::vector<bool> mask(signature_.size());
    for (std::size_t k = 0; k < signature_.size(); ++k) mask[k] = signature_[k] < 0;
    return mask;
}

Complex indefinite_inner(const ComplexVector& x, const ComplexVector& y, const KreinStructure& ks)
{
    require_dim(x.size(), ks, "indefinite_inner");
    require_dim(y.size(), ks, "indefinite_inner");
    Complex sum = 0.0;
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        const Complex term = x[k] * std::conj(y[k]);
        sum += ks[static_cast<std::size_t>(k)] > 0 ? term : -term;
    }
    return sum;
}

Complex positive_inner(const ComplexVector& x, const ComplexVector& y, const KreinStructure& ks)
{
    require_dim(x.size(), ks, "positive_inner");
    require_dim(y.size(), ks, "positive_inner");
    Complex sum = 0.0;
    for (Eigen::Index k = 0; k < x.size(); ++k) sum += x[k] * std::conj(y[k]);
    return sum;
}

double positive_norm(const ComplexVector& x)
{
    return x.norm();
}

ComplexVector apply_J(const ComplexVector& x, const KreinStructure& ks)
{
    require_dim(x.size(), ks, "apply_J");
    ComplexVector out(x.size());
    for (Eigen::Index k = 0; k < x.size(); ++k) out[k] = ks[static_cast<std::size_t>(k)] > 0 ? x[k] : -x[k];
    return out;
}

ComplexMatrix krein_adjoint(const ComplexMatrix& a, const KreinStructure& ks)
{
    if (a.rows() != a.cols()) throw DomainError("krein_adjoint: matrix is not square");
    require_dim(a.rows(), ks, "krein_adjoint");
    ComplexMatrix out = a.adjoint();
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        for (Eigen::Index j = 0; j < out.cols(); ++j) {
            if (ks[static_cast<std::size_t>(i)] != ks[static_cast<std::size_t>(j)]) out(i, j) = -out(i, j);
        }
    }
    return out;
}

double spectral_norm(const ComplexMatrix& m)
{
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

double smallest_singular_value(const ComplexMatrix& m)
{
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

}  // namespace kreinccr
