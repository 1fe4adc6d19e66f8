// cycloptics command-line front end: cycloid fitting, descent tables,
// layered-Snell convergence, wavefront constructions and interface optics.
//
// Exit codes: 0 success, 2 input/domain error, 3 physical-regime error
// (total internal reflection, ray turning point, caustic).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <cycloptics/cycloptics.hpp>

namespace {

using json = nlohmann::ordered_json;
using namespace cycloptics;

constexpr double kPi = std::numbers::pi;
constexpr double kDegree = kPi / 180.0;

std::string human(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

/// Writes to `path` when given, else to stdout.
class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw DomainError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

struct CommonOptions {
    double g = 9.81;
    std::string format;
    std::string out_path;
    std::size_t samples = 257;
    unsigned int seed = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_seed = false) {
    cmd->add_option("--g", opt.g, "gravitational acceleration [m/s^2]")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", opt.format, "output format: svg, csv or json");
    cmd->add_option("--out", opt.out_path, "output file (default: stdout)");
    cmd->add_option("--samples", opt.samples, "curve sample count")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
    if (with_seed) cmd->add_option("--seed", opt.seed, "random seed");
}

void run_fit(double b1, double b2, const CommonOptions& opt) {
    const auto fit = fit_cycloid({b1, b2});
    OutputTarget target(opt.out_path);
    if (opt.format == "svg" || opt.format == "csv") {
        const auto curve = Cycloid(fit.a).to_curve(0.0, fit.t_b, opt.samples);
        if (opt.format == "csv") {
            write_curve_csv(target.stream(), curve);
        } else {
            SvgCanvas canvas;
            canvas.add_curve(curve, "#1f77b4");
            canvas.add_dot({0.0, 0.0}, "#d62728");
            canvas.add_dot({b1, b2}, "#d62728");
            canvas.write(target.stream());
        }
        return;
    }
    target.stream() << "a = " << human(fit.a) << "\n"
                    << "t_B = " << human(fit.t_b) << "\n";
}

void run_tautochrone(double a, const std::vector<double>& starts,
                     const CommonOptions& opt) {
    for (double t0 : starts)
        if (t0 < 0.0 || t0 >= kPi)
            throw DomainError("start parameter must lie in [0, pi)");
    const auto slide = Cycloid(a).to_curve(0.0, kPi, opt.samples);
    CsvTable table{{"t0", "time_seconds"}, {}};
    for (double t0 : starts)
        table.rows.push_back({t0, descent_time(slide, t0, {opt.g})});
    OutputTarget target(opt.out_path);
    write_csv(target.stream(), table);
}

void run_bernoulli(double b1, double b2, const std::vector<int>& layer_counts,
                   const CommonOptions& opt) {
    const FitTarget fit_target(b1, b2);
    if (opt.format == "svg") {
        const auto fit = fit_cycloid(fit_target);
        const auto shot = shoot(fit_target, layer_counts.back(), opt.g);
        SvgCanvas canvas;
        canvas.add_curve(Cycloid(fit.a).to_curve(0.0, fit.t_b, opt.samples), "#1f77b4");
        canvas.add_polyline(shot.path.vertices, "#d62728", 1.0);
        OutputTarget target(opt.out_path);
        canvas.write(target.stream());
        return;
    }
    const auto rows = convergence_report(fit_target, layer_counts, opt.g);
    CsvTable table{{"N", "sup_deviation"}, {}};
    for (const auto& row : rows)
        table.rows.push_back({static_cast<double>(row.layer_count), row.sup_deviation});
    OutputTarget target(opt.out_path);
    write_csv(target.stream(), table);
}

PlanarCurve make_front(const std::string& kind, std::size_t samples) {
    AnalyticCurve f;
    if (kind == "line") {
        f.position = [](double s) { return Vec2{s, 0.0}; };
        f.d1 = [](double) { return Vec2{1.0, 0.0}; };
        f.d2 = [](double) { return Vec2{0.0, 0.0}; };
        return PlanarCurve::sample(std::move(f), -2.0, 2.0, samples);
    }
    if (kind == "circle") {
        // clockwise parametrization: the flow normal points outward
        f.position = [](double s) { return Vec2{std::cos(s), -std::sin(s)}; };
        f.d1 = [](double s) { return Vec2{-std::sin(s), -std::cos(s)}; };
        f.d2 = [](double s) { return Vec2{-std::cos(s), std::sin(s)}; };
        return PlanarCurve::sample(std::move(f), 0.0, 2.0 * kPi, samples);
    }
    if (kind == "parabola") {
        f.position = [](double s) { return Vec2{s, 0.5 * s * s}; };
        f.d1 = [](double s) { return Vec2{1.0, s}; };
        f.d2 = [](double) { return Vec2{0.0, 1.0}; };
        return PlanarCurve::sample(std::move(f), -1.5, 1.5, samples);
    }
    if (kind == "cycloid")  // includes its cusps; the lift rejects it
        return Cycloid(1.0).to_curve(0.0, 2.0 * kPi, samples);
    throw DomainError("unknown front kind: " + kind);
}

void run_wavefront(const std::string& kind, const std::vector<double>& times,
                   const CommonOptions& opt) {
    const auto front = make_front(kind, opt.samples);
    const auto lifted = contact::lift(front);

    if (opt.format == "json") {
        // tangency certificates at a spread of front points, per time
        json reports = json::array();
        for (double t : times) {
            if (t == 0.0) continue;
            for (std::size_t i = 2; i + 2 < front.size(); i += front.size() / 16 + 1) {
                const double s0 = front.params()[i];
                try {
                    const auto rep = contact::tangency_certificate(lifted, s0, t);
                    reports.push_back({{"s0", rep.s0},
                                       {"t", rep.t},
                                       {"angle_error", rep.angle_error},
                                       {"point_error", rep.point_error},
                                       {"certified", rep.certified}});
                } catch (const CausticError&) {
                    reports.push_back({{"s0", s0}, {"t", t}, {"certified", false},
                                       {"caustic", true}});
                }
            }
        }
        OutputTarget target(opt.out_path);
        target.stream() << reports.dump(2) << "\n";
        return;
    }

    SvgCanvas canvas(100.0, true);
    canvas.add_curve(front, "#1f77b4", 2.0);
    const std::size_t wave_stride = front.size() / 7 + 1;
    for (double t : times) {
        canvas.add_curve(contact::propagate_front(lifted, t), "#2ca02c");
        for (std::size_t i = 0; i < front.size(); i += wave_stride) {
            const Vec2 p = front.points()[i];
            canvas.add_circle(p, std::abs(t), "#cccccc", 0.6);
            const double th = lifted.theta[i];
            canvas.add_dot(p + t * Vec2{-std::sin(th), std::cos(th)}, "#d62728", 2.0);
        }
    }
    OutputTarget target(opt.out_path);
    canvas.write(target.stream());
}

void run_compare(double b1, double b2, int perturbations, double amplitude, int modes,
                 const CommonOptions& opt) {
    const FitTarget target(b1, b2);
    const auto fit = fit_cycloid(target);
    std::vector<PlanarCurve> slides;
    std::vector<std::string> labels;
    slides.push_back(Cycloid(fit.a).to_curve(0.0, fit.t_b, opt.samples));
    labels.push_back("cycloid");
    {
        AnalyticCurve line;
        const Vec2 b{b1, b2};
        line.position = [b](double s) { return b * s; };
        line.d1 = [b](double) { return b; };
        line.d2 = [](double) { return Vec2{0.0, 0.0}; };
        slides.push_back(PlanarCurve::sample(std::move(line), 0.0, 1.0, opt.samples));
        labels.push_back("line");
    }
    for (int i = 0; i < perturbations; ++i) {
        slides.push_back(perturb_slide(slides[0], amplitude, modes, opt.seed + i));
        labels.push_back("perturbed-" + std::to_string(i));
    }

    const auto ranking = compare_slides(target, slides, {opt.g});
    json out = json::array();
    for (const auto& entry : ranking)
        out.push_back({{"id", labels[entry.slide_index]},
                       {"time_seconds", entry.time_seconds}});
    OutputTarget target_out(opt.out_path);
    target_out.stream() << out.dump(2) << "\n";
}

int dispatch(int argc, char** argv) {
    CLI::App app{"numerical laboratory for cycloid slides and elementary wavefront optics"};
    app.require_subcommand(1);

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "cycloid through (0,0) and (b1,b2)");
    double fit_b1 = 0.0, fit_b2 = 0.0;
    CommonOptions fit_opt;
    fit_cmd->add_option("b1", fit_b1, "target x > 0")->required();
    fit_cmd->add_option("b2", fit_b2, "target depth >= 0")->required();
    add_common(fit_cmd, fit_opt);
    fit_cmd->callback([&] { run_fit(fit_b1, fit_b2, fit_opt); });

    // tautochrone
    auto* tau_cmd = app.add_subcommand("tautochrone",
                                       "descent times to the bottom from several starts");
    double tau_a = 1.0;
    std::vector<double> tau_starts;
    CommonOptions tau_opt;
    tau_cmd->add_option("a", tau_a, "cycloid radius")->required()->check(CLI::PositiveNumber);
    tau_cmd->add_option("t0", tau_starts, "start parameters in [0, pi)")->required();
    add_common(tau_cmd, tau_opt);
    tau_cmd->callback([&] { run_tautochrone(tau_a, tau_starts, tau_opt); });

    // bernoulli
    auto* ber_cmd = app.add_subcommand("bernoulli",
                                       "layered-Snell rays converging to the cycloid");
    double ber_b1 = 0.0, ber_b2 = 0.0;
    std::vector<int> ber_layers;
    CommonOptions ber_opt;
    ber_cmd->add_option("b1", ber_b1, "target x > 0")->required();
    ber_cmd->add_option("b2", ber_b2, "target depth")->required();
    ber_cmd->add_option("N", ber_layers, "layer counts")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(ber_cmd, ber_opt);
    ber_cmd->callback([&] { run_bernoulli(ber_b1, ber_b2, ber_layers, ber_opt); });

    // wavefront
    auto* wave_cmd = app.add_subcommand("wavefront",
                                        "propagated fronts and elementary waves");
    std::string wave_kind = "circle";
    std::vector<double> wave_times{1.0};
    CommonOptions wave_opt;
    wave_opt.samples = 129;
    wave_cmd->add_option("--front", wave_kind, "front shape: line, circle, parabola or cycloid");
    wave_cmd->add_option("--t", wave_times, "propagation times");
    add_common(wave_cmd, wave_opt);
    wave_cmd->callback([&] { run_wavefront(wave_kind, wave_times, wave_opt); });

    // compare
    auto* cmp_cmd = app.add_subcommand("compare",
                                       "rank slides to (b1,b2) by descent time");
    double cmp_b1 = 0.0, cmp_b2 = 0.0, cmp_amplitude = 0.03;
    int cmp_perturbations = 0, cmp_modes = 3;
    CommonOptions cmp_opt;
    cmp_cmd->add_option("b1", cmp_b1, "target x > 0")->required();
    cmp_cmd->add_option("b2", cmp_b2, "target depth")->required();
    cmp_cmd->add_option("--perturbations", cmp_perturbations,
                        "number of perturbed cycloids to race");
    cmp_cmd->add_option("--amplitude", cmp_amplitude, "perturbation amplitude [m]");
    cmp_cmd->add_option("--modes", cmp_modes, "perturbation mode count");
    add_common(cmp_cmd, cmp_opt, /*with_seed=*/true);
    cmp_cmd->callback([&] {
        run_compare(cmp_b1, cmp_b2, cmp_perturbations, cmp_amplitude, cmp_modes, cmp_opt);
    });

    // optics
    auto* opt_cmd = app.add_subcommand("optics", "interface optics reports");
    opt_cmd->require_subcommand(1);

    auto* refl = opt_cmd->add_subcommand("reflect", "mirror-image reflection point");
    double rx_ax = 0, rx_ay = 0, rx_bx = 0, rx_by = 0, rx_mirror = 0;
    CommonOptions refl_opt;
    refl->add_option("Ax", rx_ax)->required();
    refl->add_option("Ay", rx_ay)->required();
    refl->add_option("Bx", rx_bx)->required();
    refl->add_option("By", rx_by)->required();
    refl->add_option("mirror_y", rx_mirror)->required();
    add_common(refl, refl_opt);
    refl->callback([&] {
        const Vec2 p = optics::reflect({rx_ax, rx_ay}, {rx_bx, rx_by}, rx_mirror);
        json out{{"P", {p.x, p.y}}};
        OutputTarget target(refl_opt.out_path);
        target.stream() << out.dump(2) << "\n";
    });

    auto* refr = opt_cmd->add_subcommand("refract", "Snell refraction angle");
    double rf_alpha = 0, rf_v1 = 1, rf_v2 = 1;
    CommonOptions refr_opt;
    refr->add_option("alpha1_deg", rf_alpha)->required();
    refr->add_option("v1", rf_v1)->required();
    refr->add_option("v2", rf_v2)->required();
    add_common(refr, refr_opt);
    refr->callback([&] {
        const double a2 = optics::refract(rf_alpha * kDegree, rf_v1, rf_v2);
        json out{{"alpha1_deg", rf_alpha}, {"alpha2_deg", a2 / kDegree}};
        OutputTarget target(refr_opt.out_path);
        target.stream() << out.dump(2) << "\n";
    });

    auto* fermat = opt_cmd->add_subcommand("fermat", "least-time certificate for refraction");
    double fm_ax = 0, fm_ay = 0, fm_bx = 0, fm_by = 0, fm_y0 = 0, fm_v1 = 1, fm_v2 = 1;
    CommonOptions fermat_opt;
    fermat_opt.samples = 1000;
    fermat->add_option("Ax", fm_ax)->required();
    fermat->add_option("Ay", fm_ay)->required();
    fermat->add_option("Bx", fm_bx)->required();
    fermat->add_option("By", fm_by)->required();
    fermat->add_option("y0", fm_y0)->required();
    fermat->add_option("v1", fm_v1)->required();
    fermat->add_option("v2", fm_v2)->required();
    add_common(fermat, fermat_opt);
    fermat->callback([&] {
        const auto report = optics::fermat_certificate(
            {fm_ax, fm_ay}, {fm_bx, fm_by}, {fm_y0, fm_v1, fm_v2},
            static_cast<int>(fermat_opt.samples));
        json out{{"P", {report.p.x, report.p.y}},
                 {"min_time", report.min_time},
                 {"samples_checked", report.samples_checked},
                 {"max_violation", report.max_violation}};
        OutputTarget target(fermat_opt.out_path);
        target.stream() << out.dump(2) << "\n";
    });

    auto* huy = opt_cmd->add_subcommand(
        "huygens", "front angles from the elementary-wave construction");
    double hy_alpha = 0, hy_v1 = 1, hy_v2 = 1, hy_dt = 1.0;
    CommonOptions huy_opt;
    huy->add_option("alpha1_deg", hy_alpha)->required();
    huy->add_option("v1", hy_v1)->required();
    huy->add_option("v2", hy_v2)->required();
    huy->add_option("--dt", hy_dt, "construction time step");
    add_common(huy, huy_opt);
    huy->callback([&] {
        const double refracted =
            optics::huygens_refraction(hy_alpha * kDegree, {0.0, hy_v1, hy_v2}, hy_dt);
        const double reflected = optics::huygens_reflection(hy_alpha * kDegree, hy_v1, hy_dt);
        const double snell = optics::refract(hy_alpha * kDegree, hy_v1, hy_v2);
        json out{{"alpha1_deg", hy_alpha},
                 {"refracted_deg", refracted / kDegree},
                 {"snell_deg", snell / kDegree},
                 {"reflected_deg", reflected / kDegree}};
        OutputTarget target(huy_opt.out_path);
        target.stream() << out.dump(2) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const TotalInternalReflectionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const TurningPointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CausticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
