#ifndef CUTQUANT_CUTTING_HPP
#define CUTQUANT_CUTTING_HPP

#include "cutquant/projector.hpp"

#include <map>
#include <string>
#include <vector>

namespace cutquant {

// Quantization of the punctured plane C^* (equivalently S^1 x R^+) as
// spectral data: basis n in {0..n_max} with momentum eigenvalues
// hbar*(n + theta), theta in (0,1], or hbar*(n + 1/2) for the
// metaplectic variant. Every eigenvalue is strictly positive: the
// excised origin leaves no zero mode.
struct ThetaSectorSpace {
    Rational theta;   // effective shift; 1/2 when metaplectic
    int n_max = 0;
    bool metaplectic = false;
    BasisPtr basis;
    DiagonalOperator p_op;
};

ThetaSectorSpace cstar_space(const Rational& theta, int n_max, bool metaplectic = false);

// Partition of a basis by the fractional class theta_j in (0,1] of the
// operator's eigenvalues measured in units of hbar (integers land in
// theta = 1).
struct SectorDecomposition {
    std::map<Rational, std::vector<std::size_t>> sectors;
};

SectorDecomposition theta_sectors(const DiagonalOperator& f);

// The cut constraint phi = f tensor 1 - 1 tensor p on the product basis.
DiagonalOperator cut_constraint(const DiagonalOperator& f, const ThetaSectorSpace& sector);

// Labels with eigenvalue exactly 0. Approximate-mode operators are
// rejected; use exact rationals for kernel computations.
SpectralProjector constraint_kernel(const DiagonalOperator& phi);

enum class CutVerdict { verified, verified_up_to_truncation, mismatch, trivial_kernel };

std::string to_string(CutVerdict v);

struct MatchedPair {
    BasisLabel ambient;     // label of the big space
    BasisLabel sector;      // partner label of the cutting space
    Rational eigenvalue;    // shared f-eigenvalue
};

// Outcome of checking that the constraint kernel reproduces the
// positive spectral projection.
//   verified                  kernel <-> projected states is a bijection
//   verified_up_to_truncation the only missing partners have eigenvalues
//                             beyond the largest cutting eigenvalue
//   mismatch                  some positive state lacks a partner inside
//                             the truncation (e.g. wrong theta class)
//   trivial_kernel            kernel and projection are both empty
struct CutVerificationReport {
    std::size_t kernel_dim = 0;
    std::size_t projected_dim = 0;
    std::vector<MatchedPair> matched_pairs;
    std::vector<BasisLabel> unmatched_projected;
    CutVerdict verdict = CutVerdict::mismatch;

    bool passed() const {
        return verdict == CutVerdict::verified ||
               verdict == CutVerdict::verified_up_to_truncation;
    }
};

// Checks kernel(phi) = P_+(f) for a single circle-action constraint.
CutVerificationReport verify_theorem1(const BasisPtr& h, const DiagonalOperator& f,
                                      const ThetaSectorSpace& sector);

// Same check with the cutting partner a direct sum of sector spaces, one
// per theta class of f.
CutVerificationReport verify_matched_cut(const BasisPtr& h, const DiagonalOperator& f,
                                         const std::vector<ThetaSectorSpace>& sectors);

// Applies verify_theorem1 constraint by constraint, restricting each
// remaining operator to the space already cut. The final report
// compares against the joint positive projector; verified additionally
// requires order-independence (all permutations agree; only checked for
// up to 3 constraints).
CutVerificationReport iterate_cuts(const BasisPtr& h,
                                   const std::vector<DiagonalOperator>& fs,
                                   const std::vector<ThetaSectorSpace>& sectors);

// One cutting space per theta class of f, all with the given n_max.
std::vector<ThetaSectorSpace> match_sectors(const DiagonalOperator& f, int n_max);

}  // namespace cutquant

#endif
