#ifndef CUTQUANT_RIGGING_HPP
#define CUTQUANT_RIGGING_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace cutquant {

// Compactly supported wave function sampled on a uniform grid over
// [a,b]. Samples outside the support interval are exactly zero.
class GridFunction {
  public:
    GridFunction(double a, double b, std::size_t intervals,
                 std::vector<std::complex<double>> samples,
                 double support_lo, double support_hi);

    static GridFunction sample(double a, double b, std::size_t intervals,
                               const std::function<std::complex<double>(double)>& fn,
                               double support_lo, double support_hi);

    static GridFunction zero(double a, double b, std::size_t intervals);

    double a() const { return a_; }
    double b() const { return b_; }
    double step() const { return h_; }
    std::size_t intervals() const { return intervals_; }
    std::size_t nodes() const { return samples_.size(); }
    double node(std::size_t i) const { return a_ + h_ * static_cast<double>(i); }
    const std::complex<double>& value(std::size_t i) const { return samples_[i]; }
    double support_lo() const { return support_lo_; }
    double support_hi() const { return support_hi_; }

    bool same_grid(const GridFunction& other) const;

    // Index of the first node >= 0 (start of the positive-momentum part).
    std::size_t first_nonnegative_node() const;

  private:
    double a_, b_, h_;
    std::size_t intervals_;
    std::vector<std::complex<double>> samples_;
    double support_lo_, support_hi_;
};

// Nonnegative density on the same grid as the states it weighs.
class Measure {
  public:
    Measure(std::vector<double> density, std::string factorization_note = "");

    static Measure constant(std::size_t nodes, double value = 1.0);
    static Measure sample(const GridFunction& grid_of,
                          const std::function<double(double)>& fn,
                          std::string factorization_note = "");

    const std::vector<double>& density() const { return density_; }
    double at(std::size_t i) const { return density_[i]; }
    const std::string& factorization_note() const { return note_; }

  private:
    std::vector<double> density_;
    std::string note_;
};

enum class RigMethod { reduced, averaged };

struct RiggingResult {
    std::complex<double> value;
    RigMethod method = RigMethod::reduced;
    double T = 0.0;  // averaging window, meaningful for method == averaged
    std::string quadrature;
    double estimated_error = 0.0;
};

// Closed-form pairing: integral over p > 0 of
//   nu(p) psi1(p) chi1(p) conj(psi2(p) chi2(p)).
// Trapezoid rule with a step-halving error estimate. All functions must
// share one grid; the integral runs over the nodes with p >= 0.
RiggingResult rigging_reduced(const GridFunction& psi1, const GridFunction& chi1,
                              const GridFunction& psi2, const GridFunction& chi2,
                              const Measure& nu);

// Finite group averaging: double integral of
//   D_T(f - p) nu(f) psi1(f) chi1(p) conj(psi2(f) chi2(p))
// with the Dirichlet-type kernel D_T(u) = 2 sin(Tu)/u (D_T(0) = 2T)
// evaluated analytically. Requires the f-grid to resolve the
// oscillation: h <= pi/(4T). As T grows, value/(2 pi) converges to the
// reduced pairing; that normalization is fixed throughout.
RiggingResult rigging_averaged(const GridFunction& psi1, const GridFunction& chi1,
                               const GridFunction& psi2, const GridFunction& chi2,
                               const Measure& nu, double T);

struct RiggingStates {
    GridFunction psi1, chi1, psi2, chi2;
};

struct ConvergenceRow {
    double T = 0.0;
    std::complex<double> averaged_over_2pi;
    double abs_error = 0.0;
    double rel_error = 0.0;
};

struct ConvergenceStudy {
    std::vector<ConvergenceRow> rows;
    std::complex<double> reduced_value;
    double decay_rate = 0.0;      // least-squares slope of log|err| vs log T
    bool tail_decreasing = false; // tail-averaged errors non-increasing
};

ConvergenceStudy convergence_study(const RiggingStates& states, const Measure& nu,
                                   const std::vector<double>& T_list);

// Means over error tails err[i..]; their non-increase is the
// convergence criterion robust to Dirichlet-kernel oscillation.
std::vector<double> tail_means(const std::vector<double>& errors);
bool tail_averaged_decreasing(const std::vector<double>& errors);

enum class SupportClass { negative, positive, straddling };

std::string to_string(SupportClass c);

struct NamedState {
    std::string name;
    GridFunction psi;
};

struct Theorem2Entry {
    std::string name;
    SupportClass family = SupportClass::straddling;
    double rigged_norm = 0.0;        // eta(psi chi)[psi chi] via the rigging machinery
    double positive_reference = 0.0; // independent quadrature of the positive-part norm
    double full_reference = 0.0;     // independent quadrature over the whole line
    double ratio = 0.0;              // rigged / full
    double rel_error = 0.0;          // rigged vs positive reference
    bool ok = false;
};

struct Theorem2Report {
    std::vector<Theorem2Entry> entries;
    bool all_ok = false;
};

// Checks the trichotomy: states supported in f < 0 rig to zero, states
// supported in f > 0 rig to their full norm, straddling states rig to
// the norm of their positive part. The reference integrals use a
// Simpson-rule routine independent of the trapezoid path.
Theorem2Report verify_theorem2(const std::vector<NamedState>& psi_family,
                               const GridFunction& chi, const Measure& nu);

// Independent quadrature used for reference values (composite Simpson).
double simpson_real(const std::vector<double>& values, double h);

}  // namespace cutquant

#endif
