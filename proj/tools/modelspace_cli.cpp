#include "modelspace/blaschke.hpp"
#include "modelspace/boundary.hpp"
#include "modelspace/classify.hpp"
#include "modelspace/experiments.hpp"
#include "modelspace/interp.hpp"
#include "modelspace/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace modelspace;
using io::json;

namespace {

struct GeneratorFlags {
    std::string kind = "radial";
    std::size_t count = 10;
    double q = 0.5;
    double angle_step = 0.0;
    double c = 0.5;
    double s = 0.25;
    std::uint64_t seed = 1;
    std::string zeros_file;

    void attach(CLI::App* app) {
        app->add_option("--zeros", zeros_file, "Zero sequence JSON (overrides the generator)");
        app->add_option("--kind", kind, "radial | rotated | separated")
            ->check(CLI::IsMember({"radial", "rotated", "separated"}));
        app->add_option("--count", count, "Number of zeros");
        app->add_option("--q", q, "Radial ratio: z_k = (1 - q^k) e^{ik step}");
        app->add_option("--angle-step", angle_step, "Rotation per index for --kind rotated");
        app->add_option("--c", c, "Separation constant");
        app->add_option("--s", s, "Separation exponent in (0, 1/2)");
        app->add_option("--seed", seed, "Generator seed");
    }

    ZeroSequence build() const {
        if (!zeros_file.empty()) return io::zeros_from_json(io::read_json_file(zeros_file));
        static const std::map<std::string, SequenceKind> kinds{{"radial", SequenceKind::RadialGeometric},
                                                               {"rotated", SequenceKind::RotatedRadial},
                                                               {"separated", SequenceKind::Separated}};
        SequenceParams p;
        p.kind = kinds.at(kind);
        p.count = count;
        p.q = q;
        p.angle_step = angle_step;
        p.c = c;
        p.s = s;
        p.seed = seed;
        return generate_sequence(p);
    }
};

void emit(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << '\n';
    } else {
        io::write_json_file(path, j);
    }
}

SmoothnessDescriptor descriptor_from(const std::string& cls, double alpha, double p, double s) {
    if (cls == "lipschitz") return SmoothnessDescriptor::lipschitz(alpha);
    if (cls == "bmo") return SmoothnessDescriptor::bmo();
    if (cls == "gevrey") return SmoothnessDescriptor::gevrey(alpha);
    return SmoothnessDescriptor::sobolev(p, s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Model-space numerics: Blaschke products, projections, interpolation, trace classes"};
    app.require_subcommand(1);

    int grid_log2 = 12;
    double tol = 1e-9;
    std::string output;

    // generate
    auto* gen = app.add_subcommand("generate", "Write a generated zero sequence as JSON");
    GeneratorFlags gen_flags;
    gen_flags.attach(gen);
    gen->add_option("-o,--output", output, "Output file (stdout if omitted)");
    gen->callback([&] {
        const auto zeros = gen_flags.build();
        emit(io::to_json(zeros), output);
    });

    // diagnose
    auto* diag = app.add_subcommand("diagnose", "Separation, Blaschke-sum and Frostman diagnostics");
    std::string diag_zeros;
    diag->add_option("zeros", diag_zeros, "Zero sequence JSON")->required();
    diag->add_option("--grid-log2", grid_log2, "log2 of the boundary grid size")->check(CLI::Range(4, 24));
    diag->add_option("--tol", tol, "Allowed deviation of |B| from 1 on the grid");
    diag->add_option("-o,--output", output, "Output file");
    diag->callback([&] {
        const auto zeros = io::zeros_from_json(io::read_json_file(diag_zeros));
        const BlaschkeProduct b(zeros);
        const std::size_t m = std::size_t{1} << grid_log2;
        auto report = validate_sequence(zeros);
        report.scalars["delta"] = interpolation_delta(b);
        report.scalars["frostman_sup"] = frostman_sup(zeros, m);
        report.scalars["grid_size"] = static_cast<double>(m);
        const double unimodular = unimodularity_error(blaschke_boundary(b, BoundaryGrid(m)));
        report.scalars["unimodularity_error"] = unimodular;
        if (unimodular > tol) report.notes.push_back("boundary values of B deviate from modulus 1 beyond --tol");
        emit(io::to_json(report), output);
    });

    // transform
    auto* trans = app.add_subcommand("transform", "Conjugate sequence of W over Z");
    std::string zeros_path, values_path;
    bool inverse = false;
    trans->add_option("zeros", zeros_path, "Zero sequence JSON")->required();
    trans->add_option("values", values_path, "Value sequence JSON")->required();
    trans->add_flag("--inverse", inverse, "Solve for W given the conjugate sequence");
    trans->add_option("-o,--output", output, "Output file");
    trans->callback([&] {
        const auto zeros = io::zeros_from_json(io::read_json_file(zeros_path));
        const auto values = io::values_from_json(io::read_json_file(values_path));
        if (inverse) {
            const auto r = invert_conjugate(zeros, values);
            auto j = io::to_json(r.values);
            j["condition_number"] = r.condition_number;
            emit(j, output);
        } else {
            emit(io::to_json(conjugate_sequence(zeros, values)), output);
        }
    });

    // interpolate
    auto* interp = app.add_subcommand("interpolate", "Interpolant in the model space of B_Z");
    std::string form = "lagrange";
    std::string boundary_csv;
    interp->add_option("zeros", zeros_path, "Zero sequence JSON")->required();
    interp->add_option("values", values_path, "Value sequence JSON")->required();
    interp->add_option("--form", form, "lagrange | kernel")->check(CLI::IsMember({"lagrange", "kernel"}));
    interp->add_option("--boundary-csv", boundary_csv, "Write boundary samples to this CSV");
    interp->add_option("--grid-log2", grid_log2, "log2 of the boundary grid size")->check(CLI::Range(4, 24));
    interp->add_option("--tol", tol, "Model-space defect above which a note is added");
    interp->add_option("-o,--output", output, "Output file");
    interp->callback([&] {
        const auto zeros = io::zeros_from_json(io::read_json_file(zeros_path));
        const auto values = io::values_from_json(io::read_json_file(values_path));
        auto f = form == "lagrange" ? lagrange_interpolant(zeros, values) : kernel_interpolant(zeros, values);
        auto j = io::to_json(f);
        if (!boundary_csv.empty()) {
            const BoundaryGrid grid(std::size_t{1} << grid_log2);
            f.attach_samples(grid);
            std::ofstream out(boundary_csv);
            if (!out) throw std::runtime_error("cannot write " + boundary_csv);
            io::write_boundary_csv(out, *f.boundary_samples());
            const double defect = model_defect(blaschke_boundary(f.product(), grid), *f.boundary_samples());
            j["model_defect"] = defect;
            if (defect > tol) j["notes"] = {"grid under-resolves the interpolant; raise --grid-log2"};
        }
        emit(j, output);
    });

    // classify
    auto* cls = app.add_subcommand("classify", "Decay verdict of the conjugate sequence for a smoothness class");
    std::string class_name = "bmo";
    double alpha = 1.0, p = 2.0, s = 1.0;
    bool log_growth = false;
    bool cumulative = false;
    cls->add_option("zeros", zeros_path, "Zero sequence JSON")->required();
    cls->add_option("values", values_path, "Value sequence JSON")->required();
    cls->add_option("--class", class_name, "lipschitz | bmo | gevrey | sobolev")
        ->check(CLI::IsMember({"lipschitz", "bmo", "gevrey", "sobolev"}));
    cls->add_option("--alpha", alpha, "Lipschitz or Gevrey exponent");
    cls->add_option("--p", p, "Sobolev integrability exponent");
    cls->add_option("--s", s, "Sobolev smoothness");
    cls->add_flag("--log-growth", log_growth, "Test |w_k| / log(2 / (1 - |z_k|)) instead");
    cls->add_flag("--cumulative", cumulative, "Growth test on last/first of increasing runs instead of per index");
    cls->add_option("-o,--output", output, "Output file");
    cls->callback([&] {
        const auto zeros = io::zeros_from_json(io::read_json_file(zeros_path));
        const auto values = io::values_from_json(io::read_json_file(values_path));
        DecisionRule rule;
        if (cumulative) rule.growth_mode = GrowthMode::Cumulative;
        const auto verdict = log_growth ? log_growth_check(zeros, values, rule)
                                        : classify_trace(zeros, values, descriptor_from(class_name, alpha, p, s), rule);
        emit(io::to_json(verdict), output);
    });

    // experiment
    auto* exp = app.add_subcommand("experiment", "Run a trend experiment");
    std::string name;
    GeneratorFlags exp_flags;
    std::string series_csv;
    std::string target = "constant";
    std::string function = "log";
    double eps = 0.5;
    LatticeDensity density;
    exp->add_option("--name", name, "nonduality | noninterpolation | theoremB | sublevel")
        ->required()
        ->check(CLI::IsMember({"nonduality", "noninterpolation", "theoremB", "sublevel"}));
    exp_flags.attach(exp);
    exp->add_option("--grid-log2", grid_log2, "log2 of the boundary grid size")->check(CLI::Range(4, 24));
    exp->add_option("--values", values_path, "theoremB: value sequence JSON (default all ones)");
    exp->add_option("--target", target, "theoremB without --values: constant | index")
        ->check(CLI::IsMember({"constant", "index"}));
    exp->add_option("--function", function, "sublevel: log | one")->check(CLI::IsMember({"log", "one"}));
    exp->add_option("--eps", eps, "sublevel threshold in (0,1)");
    exp->add_option("--radial", density.radial, "sublevel lattice radii");
    exp->add_option("--angular", density.angular, "sublevel lattice angles");
    exp->add_option("--csv", series_csv, "Also write all series as CSV");
    exp->add_option("-o,--output", output, "Output file");
    exp->callback([&] {
        const auto zeros = exp_flags.build();
        const std::size_t m = std::size_t{1} << grid_log2;
        ExperimentResult result;
        if (name == "nonduality") {
            result = exp_nonduality(zeros, m);
        } else if (name == "noninterpolation") {
            result = exp_noninterpolation(zeros, m);
        } else if (name == "theoremB") {
            if (!values_path.empty()) {
                result = exp_theoremB(zeros, io::values_from_json(io::read_json_file(values_path)), m);
            } else if (target == "index") {
                result = exp_theoremB_constructed(zeros, [](std::size_t k) { return Complex(static_cast<double>(k)); }, m);
            } else {
                result = exp_theoremB(zeros, ValueSequence(std::vector<Complex>(zeros.size(), Complex{1.0})), m);
            }
        } else {
            const BoundaryGrid grid(m);
            const auto f = function == "log" ? log_one_minus_z(grid) : BoundaryFunction::constant(grid, 1.0);
            result = exp_sublevel(BlaschkeProduct(zeros), f, eps, density);
        }
        if (!series_csv.empty()) {
            std::ofstream out(series_csv);
            if (!out) throw std::runtime_error("cannot write " + series_csv);
            io::write_series_csv(out, result);
        }
        emit(io::to_json(result), output);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
