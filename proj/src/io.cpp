#include "modelspace/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace modelspace::io {

namespace {

Complex complex_from_json(const json& v) {
    if (!v.is_array() || v.size() != 2) throw std::invalid_argument("complex number must be [re, im]");
    return {v.at(0).get<double>(), v.at(1).get<double>()};
}

json complex_list(std::span<const Complex> values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back({v.real(), v.imag()});
    return arr;
}

}  // namespace

ZeroSequence zeros_from_json(const json& j) {
    std::vector<Complex> pts;
    for (const auto& v : j.at("zeros")) pts.push_back(complex_from_json(v));
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return ZeroSequence(std::move(pts), std::move(labels));
}

json to_json(const ZeroSequence& zeros) {
    json j;
    j["zeros"] = complex_list(zeros.values());
    j["labels"] = zeros.labels();
    return j;
}

ValueSequence values_from_json(const json& j) {
    std::vector<Complex> vals;
    for (const auto& v : j.at("values")) vals.push_back(complex_from_json(v));
    return ValueSequence(std::move(vals));
}

json to_json(const ValueSequence& values) {
    json j;
    j["values"] = complex_list(values.values());
    return j;
}

json to_json(const DiagnosticsReport& report) {
    json j = json::object();
    for (const auto& [k, v] : report.scalars) j[k] = v;
    if (!report.series.empty()) j["series"] = report.series;
    if (!report.notes.empty()) j["notes"] = report.notes;
    return j;
}

json to_json(const DecayVerdict& verdict) {
    json j;
    j["class"] = verdict.descriptor.name();
    j["satisfied"] = to_string(verdict.verdict);
    j["fitted_constant"] = verdict.fitted_constant;
    j["per_index_ratios"] = verdict.per_index_ratios;
    j["order"] = verdict.order;
    j["window_start"] = verdict.window_start;
    j["rule"] = verdict.rule;
    return j;
}

json to_json(const InterpolantRepresentation& interpolant) {
    json j;
    j["form"] = interpolant.form() == InterpolantForm::Lagrange ? "lagrange" : "kernel_basis";
    j["coefficients"] = complex_list(interpolant.coefficients());
    j["zeros"] = complex_list(interpolant.zeros().values());
    j["condition_number"] = interpolant.condition_number();
    return j;
}

json to_json(const ExperimentResult& result) {
    json j;
    j["name"] = result.name;
    j["parameters"] = result.parameters;
    json series = json::array();
    for (const auto& e : result.series) series.push_back({{"label", e.label}, {"index", e.index}, {"value", e.value}});
    j["series"] = std::move(series);
    json verdicts = json::array();
    for (const auto& v : result.verdicts) verdicts.push_back(to_json(v));
    j["verdicts"] = std::move(verdicts);
    json trends = json::array();
    for (const auto& t : result.trends) {
        trends.push_back({{"series", t.series},
                          {"strictly_increasing", t.strictly_increasing},
                          {"min_step_ratio", t.min_step_ratio},
                          {"growth_trend", t.growth_trend}});
    }
    j["trends"] = std::move(trends);
    j["warnings"] = result.warnings;
    j["runtime"] = result.runtime_seconds;
    return j;
}

json spectrum_to_json(const BoundaryFunction& f) {
    json modes = json::array();
    for (long n = f.grid().min_mode(); n < f.grid().max_mode(); ++n) {
        const Complex c = f.coeff(n);
        modes.push_back({n, c.real(), c.imag()});
    }
    return {{"grid_size", f.size()}, {"offset", f.grid().offset()}, {"modes", std::move(modes)}};
}

void write_boundary_csv(std::ostream& out, const BoundaryFunction& f) {
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (std::size_t t = 0; t < f.size(); ++t) out << t << ',' << f[t].real() << ',' << f[t].imag() << '\n';
}

BoundaryFunction read_boundary_csv(std::istream& in, double grid_offset) {
    std::vector<Complex> samples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string t, re, im;
        if (!std::getline(row, t, ',') || !std::getline(row, re, ',') || !std::getline(row, im, ',')) {
            throw std::invalid_argument("malformed boundary CSV row: " + line);
        }
        if (std::stoul(t) != samples.size()) throw std::invalid_argument("boundary CSV rows must be in node order");
        samples.emplace_back(std::stod(re), std::stod(im));
    }
    const BoundaryGrid grid(samples.size(), grid_offset);
    return BoundaryFunction::from_samples(grid, std::move(samples));
}

void write_series_csv(std::ostream& out, const ExperimentResult& result) {
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    out << "experiment,label,index,value\n";
    for (const auto& e : result.series) out << result.name << ',' << e.label << ',' << e.index << ',' << e.value << '\n';
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace modelspace::io
