#ifndef CUTQUANT_PROJECTOR_HPP
#define CUTQUANT_PROJECTOR_HPP

#include "cutquant/operators.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cutquant {

// One clause of the condition defining a projector: operator name plus
// the spectral region it is restricted to.
struct PredicateClause {
    std::string op_name;
    std::string region;
    bool operator==(const PredicateClause&) const = default;
};

// Spectral projector given by an index subset of a labeled basis. As a
// matrix it is diagonal with 0/1 entries, so P^2 = P and P = P^dagger
// hold identically.
class SpectralProjector {
  public:
    SpectralProjector(BasisPtr basis, std::vector<std::size_t> selected,
                      std::vector<PredicateClause> predicate = {});

    const BasisPtr& basis() const { return basis_; }
    const std::vector<std::size_t>& selected() const { return selected_; }
    const std::vector<PredicateClause>& predicate_record() const { return predicate_; }

    std::size_t rank() const { return selected_.size(); }
    std::size_t ambient_dimension() const { return basis_->dimension(); }
    bool contains(std::size_t index) const;

    Eigen::MatrixXcd to_matrix() const;

  private:
    BasisPtr basis_;
    std::vector<std::size_t> selected_;  // sorted, duplicate-free
    std::vector<PredicateClause> predicate_;
};

enum class Triviality { trivial_identity, near_trivial, proper, empty };

std::string to_string(Triviality t);

// Diagnosis of how much a projection removes.
struct ProjectionReport {
    std::size_t original_dim = 0;
    std::size_t projected_dim = 0;
    Rational removed_fraction{0};
    Triviality triviality_flag = Triviality::proper;
    std::string notes;
};

// Projector onto the joint strictly-positive spectral region of a
// family of commuting diagonal operators. Labels with eigenvalue
// exactly 0 are excluded. All operators must share one basis.
SpectralProjector positive_projector(const std::vector<DiagonalOperator>& fs);

// Labels with lo < f < hi, strict on both sides. Equals
// positive_projector({f - lo, hi - f}).
SpectralProjector interval_projector(const DiagonalOperator& f, const Rational& lo,
                                     const Rational& hi);

// Sub-basis in original order; nullopt is the empty-space marker.
std::optional<BasisPtr> project_space(const BasisPtr& h, const SpectralProjector& p);

// Sub-matrix of o on selected x selected indices, i.e. the compression
// of o to the projected space.
DenseOperator project_operator(const DenseOperator& o, const SpectralProjector& p);

DiagonalOperator restrict_diagonal(const DiagonalOperator& f, const SpectralProjector& p);

struct StrictObservableCheck {
    bool strict = false;
    double commutator_norm = 0.0;  // max-entry norm of [o, P]
};

StrictObservableCheck is_strict_observable(const DenseOperator& o,
                                           const SpectralProjector& p, double tol);

// Builds positive_projector(fs) and grades how trivial it is. A
// near-trivial or identity projection signals that the condition being
// imposed fails to cut anything away, so the defining inequalities
// should be checked for an empty complement.
ProjectionReport regularity_diagnostic(const std::vector<DiagonalOperator>& fs,
                                       const Rational& near_trivial_threshold);

ProjectionReport report_for_projector(const SpectralProjector& p,
                                      const Rational& near_trivial_threshold);

}  // namespace cutquant

#endif
