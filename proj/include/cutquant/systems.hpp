#ifndef CUTQUANT_SYSTEMS_HPP
#define CUTQUANT_SYSTEMS_HPP

#include "cutquant/cutting.hpp"
#include "cutquant/rigging.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cutquant {

// Cylinder phase space cut to a half-cylinder: ambient states m in
// {-N..N} with f-eigenvalues m + theta_prime - 1 (fractional class
// theta_prime), cut against the C^* quantization with angle theta_cut.
struct HalfCylinderSystem {
    BasisPtr space;
    DiagonalOperator f;
    ThetaSectorSpace sector;

    CutVerificationReport verify() const;
    std::vector<Rational> physical_spectrum() const;
};

HalfCylinderSystem half_cylinder(const Rational& theta_prime, int N,
                                 const Rational& theta_cut, int n_max);

// Two-torus cotangent bundle with the quadratic condition p1 - p2^2 > 0
// on integer momentum labels (n1, n2). The action this generates is
// neither a pure circle nor a pure line action, so only the projection
// side applies; no kernel verifier is attached.
struct TorusQuadraticSystem {
    BasisPtr space;
    DiagonalOperator f;

    SpectralProjector projector() const;
    std::size_t count_direct() const;   // 2-D enumeration
    std::size_t count_formula() const;  // per-n1 counting formula
};

TorusQuadraticSystem torus_quadratic(int N1, int N2);

// Multiplication operator x^2 + y^2 - a on an odd N x N position grid
// over [-2,2]^2; exercises the regularity diagnostic. a = 0 removes only
// the origin node (near-trivial projection), a > 0 removes a disk,
// a < 0 removes nothing (identity projector).
struct PuncturedPlaneSystem {
    BasisPtr space;
    DiagonalOperator shifted;  // x^2 + y^2 - a
    Rational a;

    ProjectionReport diagnose(const Rational& near_trivial_threshold = Rational(1, 20)) const;
};

PuncturedPlaneSystem punctured_plane_demo(int grid_n, const Rational& a);

// Half-line fixtures for the rigging-map trichotomy: wave functions of
// negative, positive and straddling support on a common grid.
struct HalfLineParams {
    double grid_a = -1.0;
    double grid_b = 5.0;
    std::size_t intervals = 1500;
    bool affine_measure = false;  // nu = 1 + p instead of nu = 1
    std::vector<std::string> fixtures = {"negative", "positive", "straddling"};
};

struct HalfLineSystem {
    std::vector<NamedState> psi_family;
    GridFunction chi;
    Measure nu;

    Theorem2Report verify() const;
};

HalfLineSystem half_line(const HalfLineParams& params);

// C^1 polynomial bump ((x-c)(d-x))^2 on [c,d], peak-normalized to 1.
std::complex<double> poly_bump(double x, double c, double d);

// Registry entry used by the command line front end.
struct RunOutcome {
    std::string summary;
    std::string report_json;  // serialized report document
    int exit_code = 0;
};

struct ExampleSystem {
    std::string name;
    std::string description;
    std::string provenance;  // construction the system realizes
    std::function<RunOutcome()> run;
};

const std::vector<ExampleSystem>& example_registry();

const ExampleSystem* find_example(const std::string& name);

}  // namespace cutquant

#endif
