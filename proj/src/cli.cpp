#include "wavedecay/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wavedecay/cone_quadrature.hpp"
#include "wavedecay/errors.hpp"
#include "wavedecay/fitting.hpp"
#include "wavedecay/inequalities.hpp"
#include "wavedecay/iteration.hpp"
#include "wavedecay/norms.hpp"
#include "wavedecay/reports.hpp"
#include "wavedecay/solver.hpp"
#include "wavedecay/trajectory_io.hpp"

namespace fs = std::filesystem;

namespace wavedecay {

namespace {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw Error(Errc::io_error, "cannot open for writing: " + path);
    os << content;
}

std::string sigma_tag(const Rational& sigma) {
    return sigma.num() >= 0 ? std::to_string(sigma.num()) + "_" + std::to_string(sigma.den())
                            : "m" + std::to_string(-sigma.num()) + "_" +
                                  std::to_string(sigma.den());
}

// ---- measurement sweeps shared by `measure` and the acceptance suite ----

std::vector<double> time_scales(const Trajectory& traj, double base = 8.0) {
    // a band whose top snapshot falls within one recording interval of 2T
    // is still fully measurable
    std::vector<double> ts;
    for (double T = base; 2.0 * T <= traj.times.back() + traj.snap_dt() + 1e-9; T *= 2.0)
        ts.push_back(T);
    return ts;
}

std::vector<double> u_scales(double T) {
    std::vector<double> us;
    for (double U = 1.0; U <= 3.0 * T / 8.0; U *= 4.0) us.push_back(U);
    return us;
}

void measure_fit(const Trajectory& traj, const fs::path& dir, ReportSink& sink,
                 RunManifest& man) {
    // v-exponent: suprema over the unit cone band at increasing T, plus the
    // interior-bulk suprema (identically small for flat linear runs)
    std::vector<std::pair<double, double>> v_samples;
    for (double T : time_scales(traj)) {
        NormReport sup = region_sup(traj, DyadicRegionSpec(RegionKind::ctu, T, 1.0), {});
        sink.add_row("sup_CTU", T, 1.0, "id", sup.value);
        if (sup.value > 0.0) v_samples.emplace_back(2.0 * T, sup.value);
        NormReport bulk =
            region_sup(traj, DyadicRegionSpec(RegionKind::interior_bulk, T), {});
        sink.add_row("sup_interior", T, 0.0, "id", bulk.value);
    }
    // u-exponent: suprema over a T-band at increasing U
    std::vector<std::pair<double, double>> u_samples;
    double T_band = time_scales(traj).empty() ? 0.0 : time_scales(traj).back();
    if (T_band > 0.0) {
        for (double U : u_scales(T_band)) {
            NormReport sup = region_sup(traj, DyadicRegionSpec(RegionKind::ctu, T_band, U), {});
            sink.add_row("sup_CTU", T_band, U, "id", sup.value);
            // band suprema sit at the corner v ~ 2T - U; carrying that
            // factor isolates the u-exponent of the two-scale envelope
            double v_corner = 2.0 * T_band - U;
            if (sup.value > 0.0)
                u_samples.emplace_back(U, sup.value * std::sqrt(1.0 + v_corner * v_corner));
        }
    }
    nlohmann::json fits;
    if (v_samples.size() >= 3) {
        FitResult f = fit_decay_exponents(v_samples);
        fits["v_exponent"] = -f.slope;
        fits["v_residual"] = f.residual;
        std::string p = (dir / "fit_v.txt").string();
        write_two_column(p, v_samples);
        man.add_output(p);
    }
    if (u_samples.size() >= 3) {
        FitResult f = fit_decay_exponents(u_samples);
        fits["u_exponent"] = -f.slope;
        fits["u_residual"] = f.residual;
        std::string p = (dir / "fit_u.txt").string();
        write_two_column(p, u_samples);
        man.add_output(p);
    }
    std::string p = (dir / "fit_summary.json").string();
    write_file(p, fits.dump(2) + "\n");
    man.add_output(p);
}

void measure_envelopes(const Trajectory& traj, const fs::path& dir, ReportSink& sink,
                       RunManifest& man) {
    const double eps = traj.config.data.epsilon;
    auto japv = [](double x) { return std::sqrt(1.0 + x * x); };
    for (double T : time_scales(traj)) {
        for (double U : u_scales(T)) {
            DyadicRegionSpec block(RegionKind::ctu, T, U);
            NormReport sup = region_sup(traj, block, {});
            double ge2 = sup.value * japv(2.0 * T) / std::sqrt(japv(U));
            sink.add_row("ge2_envelope", T, U, "id", ge2 / eps);
            double thm = sup.value * japv(2.0 * T) * japv(U);
            sink.add_row("theorem_envelope", T, U, "id", thm / eps);
            NormReport dsup = region_sup(traj, block, parse_word("t"));
            double ge2d = dsup.value * T * std::pow(japv(U), 0.25);
            sink.add_row("ge2_deriv_envelope", T, U, "t", ge2d / eps);
        }
    }
    auto hist = energy_history(traj, 0);
    double e0 = hist.front().second > 0.0 ? hist.front().second : 1.0;
    double worst = 0.0;
    for (const auto& [t, e] : hist) worst = std::max(worst, e / e0);
    sink.add_row("e0_ratio", traj.times.back(), 0.0, "id", worst);
    std::string p = (dir / "energy_history.txt").string();
    write_two_column(p, hist);
    man.add_output(p);
}

void measure_norms(const Trajectory& traj, const fs::path&, ReportSink& sink, RunManifest&) {
    double t1 = traj.times.back();
    for (NormKind k : {NormKind::le, NormKind::le1, NormKind::lestar}) {
        NormReport r = weighted_dyadic_norm(traj, k, 0.0, t1);
        sink.add_row(norm_name(k), t1, 0.0, "id", r.value);
        NormReport half = weighted_dyadic_norm(traj, k, 0.0, t1 / 2.0);
        sink.add_row(norm_name(k) + "_half", t1 / 2.0, 0.0, "id", half.value);
    }
}

void run_checks(const Trajectory& traj, const std::vector<CheckKind>& kinds,
                ReportSink& sink) {
    for (CheckKind kind : kinds) {
        switch (kind) {
            case CheckKind::cone_hardy: {
                // synthetic bump straddling the cone (content independent of
                // the PDE)
                SyntheticField f;
                f.value = [](double t, double r) {
                    double x = (r - t) / 4.0;
                    return std::exp(-x * x);
                };
                f.dr_value = [](double t, double r) {
                    double x = (r - t) / 4.0;
                    return -0.5 * x * std::exp(-x * x);
                };
                for (double t : {32.0, 64.0, 128.0}) {
                    CheckReport rep = check_cone_hardy(f, t);
                    sink.add_row(check_name(kind), rep.T, 0.0, "id", rep.ratio);
                }
                break;
            }
            case CheckKind::sobolev_u:
            case CheckKind::sobolev_r_in: {
                double T = 64.0;
                if (2.0 * T > traj.times.back()) T = 32.0;
                for (double s : {2.0, 4.0, 8.0}) {
                    CheckReport rep = check_sobolev(kind, traj, T, s);
                    sink.add_row(check_name(kind), rep.T, rep.scale2, "id", rep.ratio);
                }
                break;
            }
            case CheckKind::sobolev_r_out:
            case CheckKind::sobolev_rr: {
                for (double T : {4.0, 8.0, 16.0}) {
                    double R = 4.0 * T;
                    if (2.0 * R > traj.config.grid.r_max) continue;
                    CheckReport rep = check_sobolev(kind, traj, T, R);
                    sink.add_row(check_name(kind), rep.T, rep.scale2, "id", rep.ratio);
                }
                break;
            }
            case CheckKind::klainerman_sideris: {
                for (double T : {32.0, 64.0, 128.0}) {
                    if (2.0 * T > traj.times.back()) continue;
                    CheckReport rep = check_klainerman_sideris(traj, T, 3.0 * T / 8.0);
                    sink.add_row(check_name(kind), rep.T, rep.scale2, "id", rep.ratio);
                }
                break;
            }
            case CheckKind::morawetz_dyadic: {
                for (double T : {32.0, 64.0}) {
                    if (2.0 * T > traj.times.back()) continue;
                    CheckReport rep = check_morawetz_dyadic(traj, T, 3.0 * T / 8.0);
                    sink.add_row(check_name(kind), rep.T, rep.scale2, "id", rep.ratio);
                }
                break;
            }
            case CheckKind::morawetz_interior: {
                for (double T : {32.0, 64.0, 128.0}) {
                    if (2.0 * T > traj.times.back()) continue;
                    CheckReport rep = check_morawetz_interior(traj, T);
                    sink.add_row(check_name(kind), rep.T, 0.0, "id", rep.ratio);
                }
                break;
            }
        }
    }
}

// ---- subcommand implementations ----

int cmd_iterate(const Rational& sigma, const std::string& region, const fs::path& out_dir,
                RunManifest& man) {
    EngineConfig cfg = EngineConfig::defaults_for(sigma);
    Stopwatch sw;
    fs::create_directories(out_dir);
    IterationTrace ext;
    bool want_ext = region == "exterior" || region == "both" || region == "interior";
    if (want_ext) ext = run_exterior_iteration(cfg);
    if (region == "exterior" || region == "both") {
        std::string p = (out_dir / ("exterior_sigma_" + sigma_tag(sigma) + ".trace")).string();
        write_file(p, trace_to_text(ext));
        man.add_output(p);
    }
    if (region == "interior" || region == "both") {
        IterationTrace in = run_interior_iteration(cfg, ext);
        std::string p = (out_dir / ("interior_sigma_" + sigma_tag(sigma) + ".trace")).string();
        write_file(p, trace_to_text(in));
        man.add_output(p);
    }
    man.timings_seconds.emplace_back("iterate", sw.seconds());
    return 0;
}

int cmd_simulate(const std::string& config_path, const fs::path& out_dir, RunManifest& man) {
    SimConfig cfg = SimConfig::from_text(read_file(config_path));
    man.config_hash = config_hash(cfg);
    fs::create_directories(out_dir);
    Stopwatch sw;
    Trajectory traj = evolve(cfg);
    man.timings_seconds.emplace_back("evolve", sw.seconds());
    std::string p = (out_dir / (fs::path(config_path).stem().string() + ".traj")).string();
    Stopwatch sw2;
    save_trajectory(traj, p);
    man.add_output(p);
    man.add_output(p + ".idx");
    man.timings_seconds.emplace_back("save", sw2.seconds());
    return 0;
}

int cmd_measure(const std::string& traj_path, const std::string& suite,
                const fs::path& out_dir, RunManifest& man) {
    Trajectory traj = load_trajectory(traj_path);
    man.config_hash = config_hash(traj.config);
    fs::create_directories(out_dir);
    ReportSink sink;
    Stopwatch sw;
    if (suite == "norms") measure_norms(traj, out_dir, sink, man);
    else if (suite == "envelopes") measure_envelopes(traj, out_dir, sink, man);
    else if (suite == "fit") measure_fit(traj, out_dir, sink, man);
    else throw Error(Errc::usage_error, "unknown suite: " + suite);
    man.timings_seconds.emplace_back("measure", sw.seconds());
    std::string base = fs::path(traj_path).stem().string() + "_" + suite;
    std::string csv = (out_dir / (base + ".csv")).string();
    std::string json = (out_dir / (base + ".json")).string();
    sink.write_csv(csv);
    sink.write_json(json);
    man.add_output(csv);
    man.add_output(json);
    return 0;
}

int cmd_check(const std::string& traj_path, const std::string& kinds_csv,
              const fs::path& out_dir, RunManifest& man) {
    Trajectory traj = load_trajectory(traj_path);
    man.config_hash = config_hash(traj.config);
    fs::create_directories(out_dir);
    std::vector<CheckKind> kinds;
    std::istringstream is(kinds_csv);
    std::string tok;
    while (std::getline(is, tok, ',')) kinds.push_back(check_parse(tok));
    ReportSink sink;
    Stopwatch sw;
    run_checks(traj, kinds, sink);
    man.timings_seconds.emplace_back("check", sw.seconds());
    std::string base = fs::path(traj_path).stem().string() + "_checks";
    std::string csv = (out_dir / (base + ".csv")).string();
    std::string json = (out_dir / (base + ".json")).string();
    sink.write_csv(csv);
    sink.write_json(json);
    man.add_output(csv);
    man.add_output(json);
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& vary,
              const fs::path& out_dir, RunManifest& man) {
    auto eq = vary.find('=');
    if (eq == std::string::npos)
        throw Error(Errc::usage_error, "--vary expects key=v1,v2,...");
    std::string key = vary.substr(0, eq);
    std::vector<std::string> values;
    std::istringstream is(vary.substr(eq + 1));
    std::string tok;
    while (std::getline(is, tok, ',')) values.push_back(tok);
    if (values.empty()) throw Error(Errc::usage_error, "--vary needs at least one value");

    std::string base_text = read_file(config_path);
    fs::create_directories(out_dir);

    // each run owns its outputs exclusively; runs parallelize over values
    auto one = [&](const std::string& value) -> std::vector<std::string> {
        std::string text = base_text + "\n" + key + "=" + value + "\n";
        SimConfig cfg = SimConfig::from_text(text);
        fs::path run_dir = out_dir / (key + "_" + value);
        fs::create_directories(run_dir);
        Trajectory traj = evolve(cfg);
        std::string tp = (run_dir / "run.traj").string();
        save_trajectory(traj, tp);
        RunManifest sub;
        sub.command = "sweep:" + key + "=" + value;
        sub.config_hash = config_hash(cfg);
        sub.add_output(tp);
        sub.add_output(tp + ".idx");
        ReportSink sink;
        measure_fit(traj, run_dir, sink, sub);
        std::string csv = (run_dir / "fit.csv").string();
        sink.write_csv(csv);
        sub.add_output(csv);
        std::string mp = (run_dir / "manifest.json").string();
        sub.write(mp);
        std::vector<std::string> outs = sub.outputs;
        outs.push_back(mp);
        return outs;
    };

    std::vector<std::future<std::vector<std::string>>> futures;
    for (const auto& v : values) futures.push_back(std::async(std::launch::async, one, v));
    for (auto& f : futures)
        for (const auto& p : f.get()) man.add_output(p);
    return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, RunManifest* manifest_out) {
    CLI::App app{"wave decay laboratory"};
    app.require_subcommand(1);

    std::string sigma_text = "1/10", region = "both";
    std::string config_path, traj_path, suite = "norms", kinds, vary;
    std::string out = "out";

    auto* iterate = app.add_subcommand("iterate", "run the decay bootstrap chains");
    iterate->add_option("--sigma", sigma_text, "coefficient decay surcharge p/q");
    iterate->add_option("--region", region, "exterior|interior|both")
        ->check(CLI::IsMember({"exterior", "interior", "both"}));
    iterate->add_option("--out", out, "output directory");

    auto* simulate = app.add_subcommand("simulate", "evolve a configured run");
    simulate->add_option("--config", config_path, "config file")->required();
    simulate->add_option("--out", out, "output directory");

    auto* measure = app.add_subcommand("measure", "norms/envelopes/fits on a trajectory");
    measure->add_option("--traj", traj_path, "trajectory file")->required();
    measure->add_option("--suite", suite, "norms|envelopes|fit")
        ->check(CLI::IsMember({"norms", "envelopes", "fit"}));
    measure->add_option("--out", out, "output directory");

    auto* check = app.add_subcommand("check", "functional-inequality checks");
    check->add_option("--traj", traj_path, "trajectory file")->required();
    check->add_option("--kinds", kinds, "comma-separated check kinds")->required();
    check->add_option("--out", out, "output directory");

    auto* sweep = app.add_subcommand("sweep", "parallel independent runs");
    sweep->add_option("--config", config_path, "config file")->required();
    sweep->add_option("--vary", vary, "key=v1,v2,...")->required();
    sweep->add_option("--out", out, "output directory");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    RunManifest man;
    {
        std::ostringstream cmd;
        cmd << "wavedecay";
        for (const auto& a : args) cmd << ' ' << a;
        man.command = cmd.str();
    }

    int rc = 0;
    try {
        if (iterate->parsed()) {
            Rational sigma = Rational::parse(sigma_text);
            rc = cmd_iterate(sigma, region, out, man);
        } else if (simulate->parsed()) {
            rc = cmd_simulate(config_path, out, man);
        } else if (measure->parsed()) {
            rc = cmd_measure(traj_path, suite, out, man);
        } else if (check->parsed()) {
            rc = cmd_check(traj_path, kinds, out, man);
        } else if (sweep->parsed()) {
            rc = cmd_sweep(config_path, vary, out, man);
        }
    } catch (const BlowupError& e) {
        man.timings_seconds.emplace_back("blowup_time", e.time());
        rc = 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = e.code() == Errc::config_error || e.code() == Errc::io_error ? 3
             : e.code() == Errc::usage_error                             ? 2
                                                                          : 1;
    }

    fs::create_directories(out);
    std::string mp = (fs::path(out) / "manifest.json").string();
    man.write(mp);
    if (manifest_out) *manifest_out = man;
    return rc;
}

}  // namespace wavedecay
