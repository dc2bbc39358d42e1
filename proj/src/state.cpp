#include "cutquant/state.hpp"

#include <stdexcept>

namespace cutquant {

StateVector::StateVector(BasisPtr basis, Eigen::VectorXcd amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
    if (!basis_) throw std::invalid_argument("StateVector: null basis");
    if (amplitudes_.size() != static_cast<Eigen::Index>(basis_->dimension()))
        throw std::invalid_argument("StateVector: amplitude count must equal basis dimension");
}

StateVector StateVector::basis_state(BasisPtr basis, std::size_t index) {
    if (index >= basis->dimension())
        throw std::out_of_range("StateVector: basis state index out of range");
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->dimension()));
    amp(static_cast<Eigen::Index>(index)) = 1.0;
    return {std::move(basis), std::move(amp)};
}

std::complex<double> inner_product(const StateVector& u, const StateVector& v) {
    if (!same_basis(u.basis(), v.basis()))
        throw std::invalid_argument("inner_product: states live on different bases");
    return u.amplitudes().dot(v.amplitudes());
}

}  // namespace cutquant
