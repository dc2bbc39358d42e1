#include "cutquant/rigging.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cutquant {

GridFunction::GridFunction(double a, double b, std::size_t intervals,
                           std::vector<std::complex<double>> samples,
                           double support_lo, double support_hi)
    : a_(a), b_(b), h_((b - a) / static_cast<double>(intervals)), intervals_(intervals),
      samples_(std::move(samples)), support_lo_(std::max(support_lo, a)),
      support_hi_(std::min(support_hi, b)) {
    if (!(a < b)) throw std::invalid_argument("GridFunction: need a < b");
    if (intervals_ == 0) throw std::invalid_argument("GridFunction: need >= 1 interval");
    if (samples_.size() != intervals_ + 1)
        throw std::invalid_argument("GridFunction: need one sample per node");
    if (!(support_lo_ <= support_hi_))
        throw std::invalid_argument("GridFunction: empty support interval");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const double x = node(i);
        if (x < support_lo_ || x > support_hi_) samples_[i] = 0.0;
    }
}

GridFunction GridFunction::sample(double a, double b, std::size_t intervals,
                                  const std::function<std::complex<double>(double)>& fn,
                                  double support_lo, double support_hi) {
    std::vector<std::complex<double>> samples(intervals + 1, 0.0);
    const double h = (b - a) / static_cast<double>(intervals);
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double x = a + h * static_cast<double>(i);
        if (x >= support_lo && x <= support_hi) samples[i] = fn(x);
    }
    return {a, b, intervals, std::move(samples), support_lo, support_hi};
}

GridFunction GridFunction::zero(double a, double b, std::size_t intervals) {
    return {a, b, intervals, std::vector<std::complex<double>>(intervals + 1, 0.0), a, b};
}

bool GridFunction::same_grid(const GridFunction& other) const {
    return a_ == other.a_ && b_ == other.b_ && intervals_ == other.intervals_;
}

std::size_t GridFunction::first_nonnegative_node() const {
    for (std::size_t i = 0; i < nodes(); ++i)
        if (node(i) >= 0.0) return i;
    return nodes();
}

Measure::Measure(std::vector<double> density, std::string factorization_note)
    : density_(std::move(density)), note_(std::move(factorization_note)) {
    for (const double v : density_)
        if (v < 0.0) throw std::invalid_argument("Measure: density must be nonnegative");
}

Measure Measure::constant(std::size_t nodes, double value) {
    return Measure(std::vector<double>(nodes, value));
}

Measure Measure::sample(const GridFunction& grid_of, const std::function<double(double)>& fn,
                        std::string factorization_note) {
    std::vector<double> density(grid_of.nodes());
    for (std::size_t i = 0; i < density.size(); ++i) density[i] = fn(grid_of.node(i));
    return Measure(std::move(density), std::move(factorization_note));
}

namespace {

void require_common_grid(const GridFunction& psi1, const GridFunction& chi1,
                         const GridFunction& psi2, const GridFunction& chi2,
                         const Measure& nu) {
    if (!psi1.same_grid(chi1) || !psi1.same_grid(psi2) || !psi1.same_grid(chi2))
        throw std::invalid_argument("rigging: all states must share one grid");
    if (nu.density().size() != psi1.nodes())
        throw std::invalid_argument("rigging: measure not sampled on the states' grid");
}

// Trapezoid over samples[first..last] with node spacing h*stride,
// visiting every stride-th sample.
std::complex<double> trapezoid(const std::vector<std::complex<double>>& values, double h,
                               std::size_t first, std::size_t stride) {
    std::complex<double> acc = 0.0;
    std::size_t count = 0;
    std::size_t last = first;
    for (std::size_t i = first; i < values.size(); i += stride) {
        acc += values[i];
        last = i;
        ++count;
    }
    if (count < 2) return 0.0;
    acc -= 0.5 * (values[first] + values[last]);
    return acc * (h * static_cast<double>(stride));
}

double dirichlet_kernel(double u, double T) {
    if (u == 0.0) return 2.0 * T;
    return 2.0 * std::sin(T * u) / u;
}

}  // namespace

RiggingResult rigging_reduced(const GridFunction& psi1, const GridFunction& chi1,
                              const GridFunction& psi2, const GridFunction& chi2,
                              const Measure& nu) {
    require_common_grid(psi1, chi1, psi2, chi2, nu);
    std::vector<std::complex<double>> integrand(psi1.nodes());
    for (std::size_t i = 0; i < integrand.size(); ++i)
        integrand[i] = nu.at(i) * psi1.value(i) * chi1.value(i) *
                       std::conj(psi2.value(i) * chi2.value(i));
    const std::size_t i0 = psi1.first_nonnegative_node();
    const std::complex<double> fine = trapezoid(integrand, psi1.step(), i0, 1);
    const std::complex<double> coarse = trapezoid(integrand, psi1.step(), i0, 2);
    RiggingResult res;
    res.value = fine;
    res.method = RigMethod::reduced;
    res.quadrature = "trapezoid, h=" + std::to_string(psi1.step());
    res.estimated_error = std::abs(fine - coarse) / 3.0;
    return res;
}

RiggingResult rigging_averaged(const GridFunction& psi1, const GridFunction& chi1,
                               const GridFunction& psi2, const GridFunction& chi2,
                               const Measure& nu, double T) {
    require_common_grid(psi1, chi1, psi2, chi2, nu);
    if (!(T > 0.0)) throw std::invalid_argument("rigging_averaged: T must be positive");
    const double h = psi1.step();
    const double h_max = std::numbers::pi / (4.0 * T);
    if (h > h_max)
        throw std::invalid_argument(
            "rigging_averaged: grid too coarse to resolve the averaging oscillation; "
            "need h <= pi/(4 T) = " + std::to_string(h_max) + " but h = " +
            std::to_string(h));

    std::vector<std::complex<double>> f_factor(psi1.nodes());
    for (std::size_t i = 0; i < f_factor.size(); ++i)
        f_factor[i] = nu.at(i) * psi1.value(i) * std::conj(psi2.value(i));
    std::vector<std::complex<double>> p_factor(chi1.nodes());
    for (std::size_t j = 0; j < p_factor.size(); ++j)
        p_factor[j] = chi1.value(j) * std::conj(chi2.value(j));

    const std::size_t i0 = psi1.first_nonnegative_node();

    const auto double_sum = [&](std::size_t stride) -> std::complex<double> {
        // node weights for the strided trapezoid in each direction
        const auto weight = [&](std::size_t idx, std::size_t first,
                                std::size_t last) -> double {
            return (idx == first || idx == last) ? 0.5 : 1.0;
        };
        std::size_t f_last = 0;
        for (std::size_t i = 0; i < f_factor.size(); i += stride) f_last = i;
        std::size_t p_last = i0;
        for (std::size_t j = i0; j < p_factor.size(); j += stride) p_last = j;
        if (f_last == 0 || p_last <= i0) return 0.0;

        std::complex<double> acc = 0.0;
        for (std::size_t i = 0; i < f_factor.size(); i += stride) {
            if (f_factor[i] == std::complex<double>(0.0)) continue;
            const double fi = psi1.node(i);
            const double wi = weight(i, 0, f_last);
            std::complex<double> row = 0.0;
            for (std::size_t j = i0; j < p_factor.size(); j += stride) {
                if (p_factor[j] == std::complex<double>(0.0)) continue;
                const double wj = weight(j, i0, p_last);
                row += wj * dirichlet_kernel(fi - psi1.node(j), T) * p_factor[j];
            }
            acc += wi * f_factor[i] * row;
        }
        const double hs = h * static_cast<double>(stride);
        return acc * hs * hs;
    };

    const std::complex<double> fine = double_sum(1);
    const std::complex<double> coarse = double_sum(2);
    RiggingResult res;
    res.value = fine;
    res.method = RigMethod::averaged;
    res.T = T;
    res.quadrature = "double trapezoid, h=" + std::to_string(h);
    res.estimated_error = std::abs(fine - coarse) / 3.0;
    return res;
}

std::vector<double> tail_means(const std::vector<double>& errors) {
    std::vector<double> means(errors.size(), 0.0);
    double acc = 0.0;
    for (std::size_t i = errors.size(); i-- > 0;) {
        acc += errors[i];
        means[i] = acc / static_cast<double>(errors.size() - i);
    }
    return means;
}

bool tail_averaged_decreasing(const std::vector<double>& errors) {
    const std::vector<double> means = tail_means(errors);
    for (std::size_t i = 0; i + 1 < means.size(); ++i)
        if (means[i + 1] > means[i] * (1.0 + 1e-9) + 1e-15) return false;
    return true;
}

ConvergenceStudy convergence_study(const RiggingStates& states, const Measure& nu,
                                   const std::vector<double>& T_list) {
    if (!std::is_sorted(T_list.begin(), T_list.end()))
        throw std::invalid_argument("convergence_study: T_list must be increasing");
    ConvergenceStudy study;
    const RiggingResult reduced =
        rigging_reduced(states.psi1, states.chi1, states.psi2, states.chi2, nu);
    study.reduced_value = reduced.value;
    const double scale = std::abs(reduced.value);

    for (const double T : T_list) {
        const RiggingResult avg =
            rigging_averaged(states.psi1, states.chi1, states.psi2, states.chi2, nu, T);
        ConvergenceRow row;
        row.T = T;
        row.averaged_over_2pi = avg.value / (2.0 * std::numbers::pi);
        row.abs_error = std::abs(row.averaged_over_2pi - reduced.value);
        row.rel_error = scale > 0.0 ? row.abs_error / scale : row.abs_error;
        study.rows.push_back(row);
    }

    std::vector<double> errs;
    errs.reserve(study.rows.size());
    for (const auto& r : study.rows) errs.push_back(r.abs_error);
    study.tail_decreasing = tail_averaged_decreasing(errs);

    // least-squares slope of log|err| against log T, over positive errors
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const auto& r : study.rows) {
        if (r.abs_error <= 0.0) continue;
        const double lx = std::log(r.T), ly = std::log(r.abs_error);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++n;
    }
    if (n >= 2) {
        const double denom = static_cast<double>(n) * sxx - sx * sx;
        if (denom != 0.0) study.decay_rate = (static_cast<double>(n) * sxy - sx * sy) / denom;
    }
    return study;
}

double simpson_real(const std::vector<double>& values, double h) {
    const std::size_t n = values.size();
    if (n < 2) return 0.0;
    if (n == 2) return 0.5 * h * (values[0] + values[1]);
    const std::size_t intervals = n - 1;
    double acc = 0.0;
    std::size_t simpson_end = intervals;  // exclusive interval count handled by Simpson
    if (intervals % 2 != 0) {
        if (intervals < 3) return 0.5 * h * (values[0] + values[1]);
        simpson_end = intervals - 3;
    }
    if (simpson_end >= 2) {
        acc += values[0] + values[simpson_end];
        for (std::size_t i = 1; i < simpson_end; ++i)
            acc += values[i] * ((i % 2 == 1) ? 4.0 : 2.0);
        acc *= h / 3.0;
    }
    if (simpson_end != intervals) {
        // 3/8 rule on the last three intervals
        const std::size_t s = simpson_end;
        acc += 3.0 * h / 8.0 *
               (values[s] + 3.0 * values[s + 1] + 3.0 * values[s + 2] + values[s + 3]);
    }
    return acc;
}

std::string to_string(SupportClass c) {
    switch (c) {
        case SupportClass::negative: return "negative";
        case SupportClass::positive: return "positive";
        case SupportClass::straddling: return "straddling";
    }
    return "?";
}

Theorem2Report verify_theorem2(const std::vector<NamedState>& psi_family,
                               const GridFunction& chi, const Measure& nu) {
    if (psi_family.empty())
        throw std::invalid_argument("verify_theorem2: fixtures required");
    Theorem2Report report;
    report.all_ok = true;
    for (const auto& named : psi_family) {
        const GridFunction& psi = named.psi;
        if (!psi.same_grid(chi))
            throw std::invalid_argument("verify_theorem2: state and chi grids differ");

        Theorem2Entry e;
        e.name = named.name;
        if (psi.support_hi() <= 0.0)
            e.family = SupportClass::negative;
        else if (psi.support_lo() >= 0.0)
            e.family = SupportClass::positive;
        else
            e.family = SupportClass::straddling;

        e.rigged_norm = rigging_reduced(psi, chi, psi, chi, nu).value.real();

        std::vector<double> density(psi.nodes());
        for (std::size_t i = 0; i < density.size(); ++i)
            density[i] = nu.at(i) * std::norm(psi.value(i) * chi.value(i));
        const std::size_t i0 = psi.first_nonnegative_node();
        e.positive_reference = simpson_real(
            std::vector<double>(density.begin() + static_cast<std::ptrdiff_t>(i0),
                                density.end()),
            psi.step());
        e.full_reference = simpson_real(density, psi.step());
        e.ratio = e.full_reference > 0.0 ? e.rigged_norm / e.full_reference : 0.0;

        switch (e.family) {
            case SupportClass::negative:
                e.rel_error = std::abs(e.rigged_norm);
                e.ok = e.rel_error < 1e-9;
                break;
            case SupportClass::positive:
                e.rel_error = e.full_reference > 0.0
                                  ? std::abs(e.rigged_norm / e.full_reference - 1.0)
                                  : std::abs(e.rigged_norm);
                e.ok = e.rel_error < 1e-6;
                break;
            case SupportClass::straddling:
                e.rel_error = e.positive_reference > 0.0
                                  ? std::abs(e.rigged_norm - e.positive_reference) /
                                        e.positive_reference
                                  : std::abs(e.rigged_norm);
                e.ok = e.rel_error < 1e-4 && e.ratio > 0.0 && e.ratio < 1.0;
                break;
        }
        report.all_ok = report.all_ok && e.ok;
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace cutquant
