#include "cutquant/serialize.hpp"

#include "cutquant/systems.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace cutquant {

Json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::runtime_error("expected rational as \"p/q\" string, got " + j.dump());
}

std::string rational_decimal(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", to_double(r));
    return buf;
}

std::string double_shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Json label_to_json(const BasisLabel& l) {
    Json comps = Json::array();
    for (const auto& c : l.components) comps.push_back(format_rational(c));
    if (l.sector_tag.empty()) return comps;
    return Json{{"tag", l.sector_tag}, {"components", comps}};
}

BasisLabel label_from_json(const Json& j) {
    BasisLabel l;
    const Json* comps = &j;
    if (j.is_object()) {
        l.sector_tag = j.value("tag", "");
        comps = &j.at("components");
    }
    if (!comps->is_array()) throw std::runtime_error("label must be an array of rationals");
    for (const auto& c : *comps) l.components.push_back(rational_from_json(c));
    return l;
}

Json basis_to_json(const LabeledBasis& b) {
    Json labels = Json::array();
    for (const auto& l : b.labels()) labels.push_back(label_to_json(l));
    return Json{{"dimension", b.dimension()}, {"labels", labels}};
}

BasisPtr basis_from_json(const Json& j) {
    std::vector<BasisLabel> labels;
    for (const auto& l : j.at("labels")) labels.push_back(label_from_json(l));
    return make_basis(std::move(labels));
}

Json diagonal_to_json(const DiagonalOperator& op) {
    Json out{{"name", op.name()}, {"basis", basis_to_json(*op.basis())}};
    if (op.exact()) {
        out["mode"] = "exact";
        Json eigs = Json::array();
        for (const auto& e : op.eigenvalues()) eigs.push_back(format_rational(e));
        out["eigenvalues"] = eigs;
    } else {
        out["mode"] = "approximate";
        out["tolerance"] = op.tolerance();
        Json eigs = Json::array();
        for (std::size_t i = 0; i < op.dimension(); ++i)
            eigs.push_back(op.eigenvalue_approx(i));
        out["eigenvalues"] = eigs;
    }
    return out;
}

DiagonalOperator diagonal_from_json(const Json& j) {
    BasisPtr basis = basis_from_json(j.at("basis"));
    const std::string name = j.value("name", "f");
    const std::string mode = j.value("mode", "exact");
    if (mode == "exact") {
        std::vector<Rational> eigs;
        for (const auto& e : j.at("eigenvalues")) eigs.push_back(rational_from_json(e));
        return {std::move(basis), std::move(eigs), name};
    }
    if (mode == "approximate") {
        std::vector<double> vals;
        for (const auto& e : j.at("eigenvalues")) vals.push_back(e.get<double>());
        return DiagonalOperator::approximate(std::move(basis), std::move(vals),
                                             j.value("tolerance", 1e-9), name);
    }
    throw std::runtime_error("operator mode must be 'exact' or 'approximate', got '" +
                             mode + "'");
}

Json spectrum_to_json(const std::vector<Rational>& spec) {
    Json eigs = Json::array();
    for (const auto& e : spec) eigs.push_back(format_rational(e));
    return Json{{"spectrum", eigs}};
}

std::string spectrum_to_csv(const std::vector<Rational>& spec) {
    std::string csv = "eigenvalue\n";
    for (const auto& e : spec) csv += rational_decimal(e) + "\n";
    return csv;
}

Json projector_to_json(const SpectralProjector& p) {
    Json predicate = Json::array();
    for (const auto& clause : p.predicate_record())
        predicate.push_back(Json{{"op", clause.op_name}, {"region", clause.region}});
    return Json{{"ambient_dimension", p.ambient_dimension()},
                {"rank", p.rank()},
                {"selected", p.selected()},
                {"predicate", predicate}};
}

Json projection_report_to_json(const ProjectionReport& r) {
    return Json{{"original_dim", r.original_dim},
                {"projected_dim", r.projected_dim},
                {"removed_fraction", format_rational(r.removed_fraction)},
                {"triviality_flag", to_string(r.triviality_flag)},
                {"notes", r.notes}};
}

Json cut_report_to_json(const CutVerificationReport& r) {
    Json pairs = Json::array();
    for (const auto& m : r.matched_pairs)
        pairs.push_back(Json::array({label_to_json(m.ambient), label_to_json(m.sector),
                                     format_rational(m.eigenvalue)}));
    Json unmatched = Json::array();
    for (const auto& l : r.unmatched_projected) unmatched.push_back(label_to_json(l));
    return Json{{"kernel_dim", r.kernel_dim},
                {"projected_dim", r.projected_dim},
                {"matched_pairs", pairs},
                {"unmatched_projected", unmatched},
                {"verdict", to_string(r.verdict)}};
}

Json rigging_result_to_json(const RiggingResult& r) {
    Json out{{"value_re", r.value.real()},
             {"value_im", r.value.imag()},
             {"quadrature", r.quadrature},
             {"estimated_error", r.estimated_error}};
    out["method"] = r.method == RigMethod::reduced
                        ? Json("reduced")
                        : Json{{"averaged", Json{{"T", r.T}}}};
    return out;
}

Json convergence_to_json(const ConvergenceStudy& s) {
    Json rows = Json::array();
    for (const auto& r : s.rows)
        rows.push_back(Json{{"T", r.T},
                            {"value_re", r.averaged_over_2pi.real()},
                            {"value_im", r.averaged_over_2pi.imag()},
                            {"abs_error", r.abs_error},
                            {"rel_error", r.rel_error}});
    return Json{{"rows", rows},
                {"reduced_re", s.reduced_value.real()},
                {"reduced_im", s.reduced_value.imag()},
                {"decay_rate", s.decay_rate},
                {"tail_decreasing", s.tail_decreasing}};
}

std::string convergence_to_csv(const ConvergenceStudy& s) {
    std::string csv = "T,value_re,value_im,abs_error,rel_error\n";
    for (const auto& r : s.rows) {
        csv += double_shortest(r.T) + "," + double_shortest(r.averaged_over_2pi.real()) +
               "," + double_shortest(r.averaged_over_2pi.imag()) + "," +
               double_shortest(r.abs_error) + "," + double_shortest(r.rel_error) + "\n";
    }
    return csv;
}

namespace {

Json theorem2_entry(const Theorem2Entry& e) {
    return Json{{"name", e.name},
                {"family", to_string(e.family)},
                {"rigged_norm", e.rigged_norm},
                {"positive_reference", e.positive_reference},
                {"full_reference", e.full_reference},
                {"ratio", e.ratio},
                {"rel_error", e.rel_error},
                {"ok", e.ok}};
}

}  // namespace

Json theorem2_report_to_json(const Theorem2Report& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back(theorem2_entry(e));
    return Json{{"entries", entries}, {"all_ok", r.all_ok}};
}

namespace {

std::function<std::complex<double>(double)> analytic_form(const Json& j) {
    const std::string form = j.at("form").get<std::string>();
    if (form == "gaussian") {
        const double center = j.at("center").get<double>();
        const double width = j.value("width", 1.0);
        return [center, width](double x) {
            const double u = (x - center) / width;
            return std::complex<double>(std::exp(-u * u), 0.0);
        };
    }
    if (form == "poly_bump") {
        const double c = j.at("from").get<double>();
        const double d = j.at("to").get<double>();
        return [c, d](double x) { return poly_bump(x, c, d); };
    }
    if (form == "zero") {
        return [](double) { return std::complex<double>(0.0, 0.0); };
    }
    throw std::runtime_error("unknown state form '" + form + "'");
}

GridFunction state_from_json(const Json& grid, const Json& j) {
    const double a = grid.at("a").get<double>();
    const double b = grid.at("b").get<double>();
    const auto intervals = grid.at("intervals").get<std::size_t>();
    double lo = a, hi = b;
    if (j.contains("support")) {
        lo = j.at("support").at(0).get<double>();
        hi = j.at("support").at(1).get<double>();
    } else if (j.at("form") == "poly_bump") {
        lo = j.at("from").get<double>();
        hi = j.at("to").get<double>();
    }
    return GridFunction::sample(a, b, intervals, analytic_form(j), lo, hi);
}

}  // namespace

RiggingFixture fixture_from_json(const Json& j) {
    const Json& grid = j.at("grid");
    const Json psi1 = j.at("psi1");
    const Json chi1 = j.value("chi1", psi1);
    const Json psi2 = j.value("psi2", psi1);
    const Json chi2 = j.value("chi2", chi1);

    RiggingStates states{state_from_json(grid, psi1), state_from_json(grid, chi1),
                         state_from_json(grid, psi2), state_from_json(grid, chi2)};

    Measure nu = Measure::constant(states.psi1.nodes());
    if (j.contains("measure")) {
        const Json& m = j.at("measure");
        const std::string form = m.value("form", "constant");
        if (form == "constant") {
            nu = Measure::constant(states.psi1.nodes(), m.value("value", 1.0));
        } else if (form == "affine") {
            const double intercept = m.value("intercept", 1.0);
            const double slope = m.value("slope", 1.0);
            nu = Measure::sample(
                states.psi1,
                [intercept, slope](double x) { return intercept + slope * x; },
                "affine density");
        } else {
            throw std::runtime_error("unknown measure form '" + form + "'");
        }
    }
    return {std::move(states), std::move(nu), j.value("name", "fixture")};
}

Json manifest_to_json(const RunManifest& m) {
    return Json{{"command", m.command},
                {"configuration", m.configuration},
                {"timestamp", m.timestamp},
                {"outputs", m.outputs}};
}

RunManifest manifest_from_json(const Json& j) {
    RunManifest m;
    m.command = j.at("command").get<std::vector<std::string>>();
    m.configuration = j.at("configuration").get<std::map<std::string, std::string>>();
    m.timestamp = j.at("timestamp").get<std::string>();
    m.outputs = j.at("outputs").get<std::vector<std::string>>();
    return m;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush())
            throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string iso8601_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace cutquant
