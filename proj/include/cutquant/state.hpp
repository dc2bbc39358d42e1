#ifndef CUTQUANT_STATE_HPP
#define CUTQUANT_STATE_HPP

#include "cutquant/basis.hpp"

#include <Eigen/Dense>

#include <complex>

namespace cutquant {

// Vector in a labeled basis; one complex amplitude per basis element.
class StateVector {
  public:
    StateVector(BasisPtr basis, Eigen::VectorXcd amplitudes);

    static StateVector basis_state(BasisPtr basis, std::size_t index);

    const BasisPtr& basis() const { return basis_; }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    std::size_t dimension() const { return basis_->dimension(); }

    double norm_squared() const { return amplitudes_.squaredNorm(); }

  private:
    BasisPtr basis_;
    Eigen::VectorXcd amplitudes_;
};

// sum_k conj(u_k) v_k; throws on basis mismatch.
std::complex<double> inner_product(const StateVector& u, const StateVector& v);

}  // namespace cutquant

#endif
