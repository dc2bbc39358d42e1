#include "cutquant/projector.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutquant {

SpectralProjector::SpectralProjector(BasisPtr basis, std::vector<std::size_t> selected,
                                     std::vector<PredicateClause> predicate)
    : basis_(std::move(basis)), selected_(std::move(selected)),
      predicate_(std::move(predicate)) {
    if (!basis_) throw std::invalid_argument("SpectralProjector: null basis");
    std::sort(selected_.begin(), selected_.end());
    if (std::adjacent_find(selected_.begin(), selected_.end()) != selected_.end())
        throw std::invalid_argument("SpectralProjector: duplicate index");
    if (!selected_.empty() && selected_.back() >= basis_->dimension())
        throw std::invalid_argument("SpectralProjector: index out of range");
}

bool SpectralProjector::contains(std::size_t index) const {
    return std::binary_search(selected_.begin(), selected_.end(), index);
}

Eigen::MatrixXcd SpectralProjector::to_matrix() const {
    const auto n = static_cast<Eigen::Index>(basis_->dimension());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (const std::size_t i : selected_) m(static_cast<Eigen::Index>(i),
                                            static_cast<Eigen::Index>(i)) = 1.0;
    return m;
}

std::string to_string(Triviality t) {
    switch (t) {
        case Triviality::trivial_identity: return "trivial_identity";
        case Triviality::near_trivial: return "near_trivial";
        case Triviality::proper: return "proper";
        case Triviality::empty: return "empty";
    }
    return "?";
}

namespace {

void require_shared_basis(const std::vector<DiagonalOperator>& fs) {
    if (fs.empty())
        throw std::invalid_argument("positive_projector: nonempty operator list required");
    for (std::size_t i = 1; i < fs.size(); ++i)
        if (!same_basis(fs[i].basis(), fs[0].basis()))
            throw std::invalid_argument("operators not simultaneously diagonal in given basis");
}

}  // namespace

SpectralProjector positive_projector(const std::vector<DiagonalOperator>& fs) {
    require_shared_basis(fs);
    const std::size_t dim = fs[0].dimension();
    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < dim; ++i) {
        bool all_positive = true;
        for (const auto& f : fs) {
            if (!f.positive_at(i)) {
                all_positive = false;
                break;
            }
        }
        if (all_positive) selected.push_back(i);
    }
    std::vector<PredicateClause> predicate;
    predicate.reserve(fs.size());
    for (const auto& f : fs) predicate.push_back({f.name(), "(0, +inf)"});
    return {fs[0].basis(), std::move(selected), std::move(predicate)};
}

SpectralProjector interval_projector(const DiagonalOperator& f, const Rational& lo,
                                     const Rational& hi) {
    if (lo >= hi) throw std::invalid_argument("interval_projector: lo >= hi");
    if (!f.exact())
        throw std::invalid_argument("interval_projector: exact-mode operator required");
    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < f.dimension(); ++i) {
        const Rational& v = f.eigenvalue(i);
        if (lo < v && v < hi) selected.push_back(i);
    }
    std::vector<PredicateClause> predicate{
        {f.name(), "(" + format_rational(lo) + ", " + format_rational(hi) + ")"}};
    return {f.basis(), std::move(selected), std::move(predicate)};
}

std::optional<BasisPtr> project_space(const BasisPtr& h, const SpectralProjector& p) {
    if (!same_basis(h, p.basis()))
        throw std::invalid_argument("project_space: projector defined on a different basis");
    if (p.selected().empty()) return std::nullopt;
    if (p.rank() == h->dimension()) return h;
    std::vector<BasisLabel> labels;
    labels.reserve(p.rank());
    for (const std::size_t i : p.selected()) labels.push_back(h->label(i));
    return make_basis_unchecked(std::move(labels));
}

DenseOperator project_operator(const DenseOperator& o, const SpectralProjector& p) {
    if (!same_basis(o.basis(), p.basis()))
        throw std::invalid_argument("project_operator: operator and projector bases differ");
    const auto sub = project_space(o.basis(), p);
    if (!sub)
        throw std::invalid_argument("project_operator: projection is empty");
    const auto k = static_cast<Eigen::Index>(p.rank());
    Eigen::MatrixXcd m(k, k);
    for (Eigen::Index r = 0; r < k; ++r)
        for (Eigen::Index c = 0; c < k; ++c)
            m(r, c) = o.matrix()(static_cast<Eigen::Index>(p.selected()[r]),
                                 static_cast<Eigen::Index>(p.selected()[c]));
    return {*sub, std::move(m)};
}

DiagonalOperator restrict_diagonal(const DiagonalOperator& f, const SpectralProjector& p) {
    if (!same_basis(f.basis(), p.basis()))
        throw std::invalid_argument("restrict_diagonal: operator and projector bases differ");
    const auto sub = project_space(f.basis(), p);
    if (!sub)
        throw std::invalid_argument("restrict_diagonal: projection is empty");
    std::vector<Rational> eigs;
    eigs.reserve(p.rank());
    for (const std::size_t i : p.selected()) eigs.push_back(f.eigenvalue(i));
    return {*sub, std::move(eigs), f.name()};
}

StrictObservableCheck is_strict_observable(const DenseOperator& o,
                                           const SpectralProjector& p, double tol) {
    if (!same_basis(o.basis(), p.basis()))
        throw std::invalid_argument("is_strict_observable: operator and projector bases differ");
    // P is diagonal 0/1, so [o, P](i,j) = o(i,j) * (P_jj - P_ii): only
    // entries straddling the cut contribute.
    double norm = 0.0;
    const auto n = static_cast<Eigen::Index>(o.dimension());
    for (Eigen::Index i = 0; i < n; ++i) {
        const bool pi = p.contains(static_cast<std::size_t>(i));
        for (Eigen::Index j = 0; j < n; ++j) {
            const bool pj = p.contains(static_cast<std::size_t>(j));
            if (pi != pj) norm = std::max(norm, std::abs(o.matrix()(i, j)));
        }
    }
    return {norm <= tol, norm};
}

ProjectionReport report_for_projector(const SpectralProjector& p,
                                      const Rational& near_trivial_threshold) {
    ProjectionReport rep;
    rep.original_dim = p.ambient_dimension();
    rep.projected_dim = p.rank();
    rep.removed_fraction =
        Rational(1) - Rational(static_cast<std::int64_t>(rep.projected_dim),
                               static_cast<std::int64_t>(rep.original_dim));
    if (rep.projected_dim == 0) {
        rep.triviality_flag = Triviality::empty;
        rep.notes = "projection removes every state; the defining condition is empty "
                    "on this space";
    } else if (rep.removed_fraction == Rational(0)) {
        rep.triviality_flag = Triviality::trivial_identity;
        rep.notes = "projector equals the identity; the defining condition removes "
                    "nothing, so the region where it fails is empty on this space and "
                    "the construction degenerates";
    } else if (rep.removed_fraction < near_trivial_threshold) {
        rep.triviality_flag = Triviality::near_trivial;
        rep.notes = "projection removes almost nothing; check that the set where the "
                    "defining inequalities fail is genuinely nonempty";
    } else {
        rep.triviality_flag = Triviality::proper;
    }
    if (!rep.notes.empty()) rep.notes += ". ";
    rep.notes += "Caveat: spectral projection cannot detect quantization sectors that "
                 "only appear because the restricted space has new noncontractible "
                 "loops; such sectors are outside this diagnostic.";
    return rep;
}

ProjectionReport regularity_diagnostic(const std::vector<DiagonalOperator>& fs,
                                       const Rational& near_trivial_threshold) {
    return report_for_projector(positive_projector(fs), near_trivial_threshold);
}

}  // namespace cutquant
