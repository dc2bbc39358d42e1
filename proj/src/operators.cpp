#include "cutquant/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutquant {

DiagonalOperator::DiagonalOperator(BasisPtr basis, std::vector<Rational> eigenvalues,
                                   std::string name)
    : basis_(std::move(basis)), eigs_(std::move(eigenvalues)), name_(std::move(name)) {
    if (!basis_) throw std::invalid_argument("DiagonalOperator: null basis");
    if (eigs_.size() != basis_->dimension())
        throw std::invalid_argument("DiagonalOperator: eigenvalue per basis label required");
}

DiagonalOperator DiagonalOperator::approximate(BasisPtr basis, std::vector<double> values,
                                               double tolerance, std::string name) {
    if (!basis) throw std::invalid_argument("DiagonalOperator: null basis");
    if (values.size() != basis->dimension())
        throw std::invalid_argument("DiagonalOperator: eigenvalue per basis label required");
    if (tolerance < 0) throw std::invalid_argument("DiagonalOperator: negative tolerance");
    DiagonalOperator op(std::move(basis), std::vector<Rational>(values.size(), Rational(0)),
                        std::move(name));
    op.eigs_.clear();
    op.approx_ = std::move(values);
    op.tolerance_ = tolerance;
    return op;
}

DiagonalOperator DiagonalOperator::from_function(
    BasisPtr basis, const std::function<Rational(const BasisLabel&)>& fn, std::string name) {
    if (!basis) throw std::invalid_argument("DiagonalOperator: null basis");
    std::vector<Rational> eigs;
    eigs.reserve(basis->dimension());
    for (const auto& l : basis->labels()) eigs.push_back(fn(l));
    return {std::move(basis), std::move(eigs), std::move(name)};
}

DiagonalOperator DiagonalOperator::constant(BasisPtr basis, const Rational& value,
                                            std::string name) {
    if (!basis) throw std::invalid_argument("DiagonalOperator: null basis");
    std::vector<Rational> eigs(basis->dimension(), value);
    return {std::move(basis), std::move(eigs), std::move(name)};
}

const std::vector<Rational>& DiagonalOperator::eigenvalues() const {
    if (!exact())
        throw std::domain_error("operator '" + name_ +
                                "' is in approximate mode; exact eigenvalues unavailable");
    return eigs_;
}

const Rational& DiagonalOperator::eigenvalue(std::size_t i) const {
    if (!exact())
        throw std::domain_error("operator '" + name_ +
                                "' is in approximate mode; exact eigenvalues unavailable");
    return eigs_.at(i);
}

double DiagonalOperator::eigenvalue_approx(std::size_t i) const {
    return exact() ? to_double(eigs_.at(i)) : approx_.at(i);
}

Rational DiagonalOperator::eigenvalue_of(const BasisLabel& l) const {
    const auto idx = basis_->index_of(l);
    if (!idx)
        throw std::invalid_argument("label " + l.to_string() + " not in basis of '" + name_ + "'");
    return eigenvalue(*idx);
}

bool DiagonalOperator::positive_at(std::size_t i) const {
    if (exact()) return eigs_[i] > Rational(0);
    return approx_[i] > tolerance_;
}

DiagonalOperator DiagonalOperator::renamed(std::string name) const {
    DiagonalOperator copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

DiagonalOperator diag_combine(const DiagonalOperator& f, const DiagonalOperator& g,
                              int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("diag_combine: sign must be +1 or -1");
    const BasisPtr product = tensor_basis(f.basis(), g.basis());
    const std::string name =
        f.name() + (sign > 0 ? " + " : " - ") + g.name();
    const std::size_t nb = g.dimension();

    if (f.exact() && g.exact()) {
        std::vector<Rational> eigs;
        eigs.reserve(f.dimension() * nb);
        for (std::size_t i = 0; i < f.dimension(); ++i) {
            const Rational& fa = f.eigenvalue(i);
            for (std::size_t j = 0; j < nb; ++j)
                eigs.push_back(sign > 0 ? fa + g.eigenvalue(j) : fa - g.eigenvalue(j));
        }
        return {product, std::move(eigs), name};
    }

    std::vector<double> vals;
    vals.reserve(f.dimension() * nb);
    for (std::size_t i = 0; i < f.dimension(); ++i)
        for (std::size_t j = 0; j < nb; ++j)
            vals.push_back(f.eigenvalue_approx(i) + sign * g.eigenvalue_approx(j));
    return DiagonalOperator::approximate(product, std::move(vals),
                                         f.tolerance() + g.tolerance(), name);
}

std::vector<Rational> spectrum(const DiagonalOperator& f) {
    std::vector<Rational> spec = f.eigenvalues();
    std::sort(spec.begin(), spec.end());
    return spec;
}

DenseOperator::DenseOperator(BasisPtr basis, Eigen::MatrixXcd matrix,
                             bool hermitian_declared, double hermitian_tol)
    : basis_(std::move(basis)), matrix_(std::move(matrix)),
      hermitian_declared_(hermitian_declared) {
    if (!basis_) throw std::invalid_argument("DenseOperator: null basis");
    const auto n = static_cast<Eigen::Index>(basis_->dimension());
    if (matrix_.rows() != n || matrix_.cols() != n)
        throw std::invalid_argument("DenseOperator: matrix must be dim x dim");
    if (hermitian_declared_ && hermiticity_defect() > hermitian_tol)
        throw std::invalid_argument("DenseOperator: declared hermitian but defect exceeds " +
                                    std::to_string(hermitian_tol));
}

DenseOperator DenseOperator::identity(BasisPtr basis) {
    const auto n = static_cast<Eigen::Index>(basis->dimension());
    return {std::move(basis), Eigen::MatrixXcd::Identity(n, n), true};
}

DenseOperator DenseOperator::from_diagonal(const DiagonalOperator& d) {
    const auto n = static_cast<Eigen::Index>(d.dimension());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        m(i, i) = d.eigenvalue_approx(static_cast<std::size_t>(i));
    return {d.basis(), std::move(m), true};
}

double DenseOperator::hermiticity_defect() const {
    return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace cutquant
