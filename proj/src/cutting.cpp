#include "cutquant/cutting.hpp"

#include "cutquant/config.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cutquant {

ThetaSectorSpace cstar_space(const Rational& theta, int n_max, bool metaplectic) {
    if (n_max < 0) throw std::invalid_argument("cstar_space: n_max must be >= 0");
    const Rational shift = metaplectic ? Rational(1, 2) : theta;
    if (!metaplectic && (theta <= Rational(0) || theta > Rational(1)))
        throw std::invalid_argument("cstar_space: theta must lie in (0,1], got " +
                                    format_rational(theta));
    std::vector<BasisLabel> labels;
    std::vector<Rational> eigs;
    labels.reserve(static_cast<std::size_t>(n_max) + 1);
    eigs.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        labels.push_back({{Rational(n)}, ""});
        eigs.push_back(hbar() * (Rational(n) + shift));
    }
    BasisPtr basis = make_basis_unchecked(std::move(labels));
    DiagonalOperator p_op(basis, std::move(eigs), "p");
    return {shift, n_max, metaplectic, std::move(basis), std::move(p_op)};
}

SectorDecomposition theta_sectors(const DiagonalOperator& f) {
    if (!f.exact())
        throw std::invalid_argument("theta_sectors: exact-mode operator required");
    SectorDecomposition out;
    for (std::size_t i = 0; i < f.dimension(); ++i) {
        const Rational scaled = f.eigenvalue(i) / hbar();
        out.sectors[fractional_class(scaled).theta].push_back(i);
    }
    return out;
}

DiagonalOperator cut_constraint(const DiagonalOperator& f, const ThetaSectorSpace& sector) {
    return diag_combine(f, sector.p_op, -1).renamed("phi");
}

SpectralProjector constraint_kernel(const DiagonalOperator& phi) {
    if (!phi.exact())
        throw std::invalid_argument(
            "constraint_kernel: approximate-mode operator rejected; kernel detection "
            "needs exact rational eigenvalues");
    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < phi.dimension(); ++i)
        if (phi.eigenvalue(i) == Rational(0)) selected.push_back(i);
    return {phi.basis(), std::move(selected), {{phi.name(), "{0}"}}};
}

std::string to_string(CutVerdict v) {
    switch (v) {
        case CutVerdict::verified: return "verified";
        case CutVerdict::verified_up_to_truncation: return "verified_up_to_truncation";
        case CutVerdict::mismatch: return "mismatch";
        case CutVerdict::trivial_kernel: return "trivial_kernel";
    }
    return "?";
}

namespace {

struct SectorReach {
    Rational theta;
    Rational max_eigenvalue;  // hbar*(n_max + theta)
};

// Shared matching core: given the kernel indices of phi on the product
// basis h (x) cut_basis and the eigenvalue table of the cutting
// operator, classify the correspondence against positive_projector(f).
CutVerificationReport match_kernel(const BasisPtr& h, const DiagonalOperator& f,
                                   const BasisPtr& cut_basis,
                                   const SpectralProjector& kernel,
                                   const std::vector<SectorReach>& reaches) {
    CutVerificationReport rep;
    const std::size_t nb = cut_basis->dimension();

    std::vector<std::size_t> matched_ambient;
    for (const std::size_t k : kernel.selected()) {
        const std::size_t i = k / nb;
        const std::size_t j = k % nb;
        matched_ambient.push_back(i);
        rep.matched_pairs.push_back({h->label(i), cut_basis->label(j), f.eigenvalue(i)});
    }
    std::sort(matched_ambient.begin(), matched_ambient.end());
    rep.kernel_dim = rep.matched_pairs.size();

    const SpectralProjector projected = positive_projector({f});
    rep.projected_dim = projected.rank();

    std::vector<std::size_t> unmatched;
    std::set_difference(projected.selected().begin(), projected.selected().end(),
                        matched_ambient.begin(), matched_ambient.end(),
                        std::back_inserter(unmatched));
    rep.unmatched_projected.reserve(unmatched.size());
    for (const std::size_t i : unmatched) rep.unmatched_projected.push_back(h->label(i));

    if (unmatched.empty()) {
        rep.verdict = rep.projected_dim > 0 ? CutVerdict::verified
                                            : CutVerdict::trivial_kernel;
        return rep;
    }

    // The failure is a pure truncation effect when every missing partner
    // lies in a covered theta class beyond its sector's largest
    // eigenvalue.
    bool truncation_only = true;
    for (const std::size_t i : unmatched) {
        const Rational& eig = f.eigenvalue(i);
        const Rational cls = fractional_class(eig / hbar()).theta;
        bool explained = false;
        for (const auto& reach : reaches)
            if (reach.theta == cls && eig > reach.max_eigenvalue) {
                explained = true;
                break;
            }
        if (!explained) {
            truncation_only = false;
            break;
        }
    }
    rep.verdict = truncation_only ? CutVerdict::verified_up_to_truncation
                                  : CutVerdict::mismatch;
    return rep;
}

void require_exact_on(const BasisPtr& h, const DiagonalOperator& f) {
    if (!same_basis(f.basis(), h))
        throw std::invalid_argument("constraint operator is not defined on the given basis");
    if (!f.exact())
        throw std::invalid_argument("exact-mode constraint operator required");
}

}  // namespace

CutVerificationReport verify_theorem1(const BasisPtr& h, const DiagonalOperator& f,
                                      const ThetaSectorSpace& sector) {
    require_exact_on(h, f);
    const DiagonalOperator phi = cut_constraint(f, sector);
    const SpectralProjector kernel = constraint_kernel(phi);
    const std::vector<SectorReach> reach{
        {sector.theta, hbar() * (Rational(sector.n_max) + sector.theta)}};
    return match_kernel(h, f, sector.basis, kernel, reach);
}

CutVerificationReport verify_matched_cut(const BasisPtr& h, const DiagonalOperator& f,
                                         const std::vector<ThetaSectorSpace>& sectors) {
    require_exact_on(h, f);
    if (sectors.empty())
        throw std::invalid_argument("verify_matched_cut: at least one sector required");

    std::vector<BasisPtr> parts;
    std::vector<std::string> tags;
    std::vector<SectorReach> reaches;
    for (const auto& s : sectors) {
        parts.push_back(s.basis);
        tags.push_back("theta=" + format_rational(s.theta));
        reaches.push_back({s.theta, hbar() * (Rational(s.n_max) + s.theta)});
    }
    const BasisPtr ds = direct_sum(parts, tags);

    std::vector<Rational> p_eigs;
    p_eigs.reserve(ds->dimension());
    for (const auto& s : sectors)
        for (std::size_t i = 0; i < s.basis->dimension(); ++i)
            p_eigs.push_back(s.p_op.eigenvalue(i));
    const DiagonalOperator p_ds(ds, std::move(p_eigs), "p");

    const DiagonalOperator phi = diag_combine(f, p_ds, -1).renamed("phi");
    const SpectralProjector kernel = constraint_kernel(phi);
    return match_kernel(h, f, ds, kernel, reaches);
}

CutVerificationReport iterate_cuts(const BasisPtr& h,
                                   const std::vector<DiagonalOperator>& fs,
                                   const std::vector<ThetaSectorSpace>& sectors) {
    if (fs.empty()) throw std::invalid_argument("iterate_cuts: nonempty constraint list");
    if (fs.size() != sectors.size())
        throw std::invalid_argument("iterate_cuts: one sector space per constraint");
    for (const auto& f : fs) require_exact_on(h, f);

    if (fs.size() == 1) return verify_theorem1(h, fs[0], sectors[0]);

    const SpectralProjector joint = positive_projector(fs);

    // One sequential pass; returns surviving original indices plus the
    // final-stage report mapped back to original labels.
    struct PassResult {
        std::vector<std::size_t> survivors;  // original indices, sorted
        CutVerificationReport last_stage;
    };
    const auto run_order = [&](const std::vector<std::size_t>& order) {
        PassResult res;
        res.survivors.resize(h->dimension());
        std::iota(res.survivors.begin(), res.survivors.end(), 0);
        BasisPtr current = h;
        for (const std::size_t c : order) {
            if (res.survivors.empty()) break;
            std::vector<Rational> eigs;
            eigs.reserve(res.survivors.size());
            for (const std::size_t i : res.survivors) eigs.push_back(fs[c].eigenvalue(i));
            const DiagonalOperator restricted(current, std::move(eigs), fs[c].name());
            res.last_stage = verify_theorem1(current, restricted, sectors[c]);

            std::vector<std::size_t> next;
            next.reserve(res.last_stage.kernel_dim);
            std::set<BasisLabel> kept;
            for (const auto& pair : res.last_stage.matched_pairs) kept.insert(pair.ambient);
            std::vector<BasisLabel> next_labels;
            for (std::size_t pos = 0; pos < res.survivors.size(); ++pos) {
                if (kept.count(current->label(pos))) {
                    next.push_back(res.survivors[pos]);
                    next_labels.push_back(current->label(pos));
                }
            }
            res.survivors = std::move(next);
            if (res.survivors.empty()) break;
            current = make_basis_unchecked(std::move(next_labels));
        }
        return res;
    };

    std::vector<std::size_t> order(fs.size());
    std::iota(order.begin(), order.end(), 0);
    const PassResult primary = run_order(order);

    bool order_independent = true;
    if (fs.size() <= 3) {
        std::vector<std::size_t> perm = order;
        while (std::next_permutation(perm.begin(), perm.end())) {
            if (run_order(perm).survivors != primary.survivors) {
                order_independent = false;
                break;
            }
        }
    }

    CutVerificationReport rep;
    rep.kernel_dim = primary.survivors.size();
    rep.projected_dim = joint.rank();
    for (const auto& pair : primary.last_stage.matched_pairs) {
        // recover the original label: survivors are original indices of
        // the final space, in order
        rep.matched_pairs.push_back(pair);
    }
    std::vector<std::size_t> unmatched;
    std::set_difference(joint.selected().begin(), joint.selected().end(),
                        primary.survivors.begin(), primary.survivors.end(),
                        std::back_inserter(unmatched));
    for (const std::size_t i : unmatched) rep.unmatched_projected.push_back(h->label(i));

    if (!order_independent) {
        rep.verdict = CutVerdict::mismatch;
        return rep;
    }
    if (unmatched.empty()) {
        rep.verdict = rep.projected_dim > 0 ? CutVerdict::verified
                                            : CutVerdict::trivial_kernel;
        return rep;
    }
    bool truncation_only = true;
    for (const std::size_t i : unmatched) {
        bool label_explained = true;
        for (std::size_t c = 0; c < fs.size() && label_explained; ++c) {
            const Rational& eig = fs[c].eigenvalue(i);  // positive: i is joint-selected
            const Rational cls = fractional_class(eig / hbar()).theta;
            const Rational reach = hbar() * (Rational(sectors[c].n_max) + sectors[c].theta);
            const bool has_partner = cls == sectors[c].theta && eig <= reach;
            if (!has_partner) {
                // dropped at stage c; acceptable only if beyond truncation
                if (!(cls == sectors[c].theta && eig > reach)) label_explained = false;
            }
        }
        if (!label_explained) {
            truncation_only = false;
            break;
        }
    }
    rep.verdict = truncation_only ? CutVerdict::verified_up_to_truncation
                                  : CutVerdict::mismatch;
    return rep;
}

std::vector<ThetaSectorSpace> match_sectors(const DiagonalOperator& f, int n_max) {
    const SectorDecomposition decomp = theta_sectors(f);
    std::vector<ThetaSectorSpace> out;
    out.reserve(decomp.sectors.size());
    for (const auto& [theta, indices] : decomp.sectors)
        out.push_back(cstar_space(theta, n_max, false));
    return out;
}

}  // namespace cutquant
