#ifndef CUTQUANT_OPERATORS_HPP
#define CUTQUANT_OPERATORS_HPP

#include "cutquant/basis.hpp"
#include "cutquant/rational.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace cutquant {

// Operator diagonal in the labeled basis, one eigenvalue per label in
// basis order. Exact rational eigenvalues are the default; the
// approximate (double) mode carries a tolerance and exists for demos
// only. Two diagonal operators on the same basis commute by
// construction.
class DiagonalOperator {
  public:
    DiagonalOperator(BasisPtr basis, std::vector<Rational> eigenvalues,
                     std::string name = "f");

    static DiagonalOperator approximate(BasisPtr basis, std::vector<double> values,
                                        double tolerance, std::string name = "f");

    static DiagonalOperator from_function(
        BasisPtr basis, const std::function<Rational(const BasisLabel&)>& fn,
        std::string name = "f");

    static DiagonalOperator constant(BasisPtr basis, const Rational& value,
                                     std::string name = "f");

    const BasisPtr& basis() const { return basis_; }
    const std::string& name() const { return name_; }
    bool exact() const { return approx_.empty(); }
    double tolerance() const { return tolerance_; }

    std::size_t dimension() const { return basis_->dimension(); }
    const std::vector<Rational>& eigenvalues() const;
    const Rational& eigenvalue(std::size_t i) const;
    double eigenvalue_approx(std::size_t i) const;
    Rational eigenvalue_of(const BasisLabel& l) const;

    // Strict positivity at index i: > 0 exactly in exact mode,
    // > tolerance in approximate mode.
    bool positive_at(std::size_t i) const;

    DiagonalOperator renamed(std::string name) const;

  private:
    BasisPtr basis_;
    std::vector<Rational> eigs_;
    std::vector<double> approx_;
    double tolerance_ = 0.0;
    std::string name_;
};

// f tensor 1 + sign * (1 tensor g) on tensor_basis(f.basis, g.basis).
// Exact when both inputs are exact.
DiagonalOperator diag_combine(const DiagonalOperator& f, const DiagonalOperator& g,
                              int sign);

// Eigenvalue multiset, sorted ascending, multiplicities kept.
std::vector<Rational> spectrum(const DiagonalOperator& f);

// Dense operator on a labeled basis. When hermitian_declared is set the
// constructor verifies max |M - M^dagger| entry <= hermitian_tol.
class DenseOperator {
  public:
    DenseOperator(BasisPtr basis, Eigen::MatrixXcd matrix,
                  bool hermitian_declared = false, double hermitian_tol = 1e-12);

    static DenseOperator identity(BasisPtr basis);
    static DenseOperator from_diagonal(const DiagonalOperator& d);

    const BasisPtr& basis() const { return basis_; }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }
    std::size_t dimension() const { return basis_->dimension(); }
    bool hermitian_declared() const { return hermitian_declared_; }

    // max entry of |M - M^dagger|
    double hermiticity_defect() const;
    bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

  private:
    BasisPtr basis_;
    Eigen::MatrixXcd matrix_;
    bool hermitian_declared_;
};

}  // namespace cutquant

#endif
