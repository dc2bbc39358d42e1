#ifndef CUTQUANT_SERIALIZE_HPP
#define CUTQUANT_SERIALIZE_HPP

#include "cutquant/cutting.hpp"
#include "cutquant/projector.hpp"
#include "cutquant/rigging.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace cutquant {

using Json = nlohmann::json;

// --- rationals -------------------------------------------------------
// JSON has no rational type; rationals serialize as "p/q" strings and
// stay symbolic. CSV expands them to 12 significant decimal digits.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
std::string rational_decimal(const Rational& r);

// Shortest round-trip decimal for doubles.
std::string double_shortest(double v);

// --- core types ------------------------------------------------------

Json label_to_json(const BasisLabel& l);
BasisLabel label_from_json(const Json& j);

Json basis_to_json(const LabeledBasis& b);
BasisPtr basis_from_json(const Json& j);

Json diagonal_to_json(const DiagonalOperator& op);
DiagonalOperator diagonal_from_json(const Json& j);

Json spectrum_to_json(const std::vector<Rational>& spec);
std::string spectrum_to_csv(const std::vector<Rational>& spec);

Json projector_to_json(const SpectralProjector& p);
Json projection_report_to_json(const ProjectionReport& r);

Json cut_report_to_json(const CutVerificationReport& r);

Json rigging_result_to_json(const RiggingResult& r);
Json convergence_to_json(const ConvergenceStudy& s);
std::string convergence_to_csv(const ConvergenceStudy& s);
Json theorem2_report_to_json(const Theorem2Report& r);

// --- rigging fixtures ------------------------------------------------
// A fixture file describes the grid, the measure and analytic forms of
// the four states:
//   {"grid": {"a": -2, "b": 6, "intervals": 512},
//    "measure": {"form": "constant", "value": 1},
//    "psi1": {"form": "gaussian", "center": 2, "width": 1,
//             "support": [-2, 6]}, ...}
// Forms: gaussian (exp(-((x-center)/width)^2)), poly_bump (C^1 bump on
// [from, to]), zero.

struct RiggingFixture {
    RiggingStates states;
    Measure nu;
    std::string name;
};

RiggingFixture fixture_from_json(const Json& j);

// --- run manifests ---------------------------------------------------

struct RunManifest {
    std::vector<std::string> command;                 // argv echo
    std::map<std::string, std::string> configuration; // hbar, theta, ...
    std::string timestamp;                            // ISO 8601 UTC
    std::vector<std::string> outputs;                 // files written

    bool operator==(const RunManifest&) const = default;
};

Json manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const Json& j);

// Atomic file write: temp file in the target directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

std::string iso8601_utc_now();

}  // namespace cutquant

#endif
