// Command-line front end: scatter | synthesize | evolve | predict | experiment.
// Every run writes a manifest.json with the fully resolved configuration next
// to its outputs, so runs are reproducible byte for byte.
#include <CLI11.hpp>
#include <json.hpp>

#include "nlslab/asymptotics.hpp"
#include "nlslab/evolve.hpp"
#include "nlslab/experiments.hpp"
#include "nlslab/json_io.hpp"
#include "nlslab/potentials.hpp"

#include <filesystem>
#include <iostream>

using namespace nlslab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Config {
    std::string command;
    std::string potential = "black-soliton";
    double amp = 0.05;
    double sigma = 1.0;
    double eps = 0.05;
    std::string poles = "pi/2";
    std::string mags;
    double grid_L = 40.0;
    int grid_n = 2048;
    double dt = 2e-3;
    int z_nodes = 128;
    double delta0 = 0.05;
    double delta1 = 0.02;
    double rho = 0.0; // 0: automatic
    int n_scan = 512;
    double t_final = 1.0;
    double snapshot_every = 0.0; // 0: final only
    std::string xi_list = "-0.4,-0.2,0.2,0.4";
    std::string t_list = "5,10,20,40";
    std::string eps_list = "0.02,0.04,0.08";
    std::string data_path;
    std::string out_dir = "out";
    std::string experiment = "theorem1";
};

double parse_angle(std::string tok) {
    // accepts "pi", "pi/3", "2pi/3", "0.7pi", plain decimals
    auto pos = tok.find("pi");
    if (pos == std::string::npos) return std::stod(tok);
    double num = 1.0;
    if (pos > 0) num = std::stod(tok.substr(0, pos));
    double den = 1.0;
    auto rest = tok.substr(pos + 2);
    if (!rest.empty()) {
        if (rest[0] != '/') throw CLI::ValidationError("angle", "cannot parse '" + tok + "'");
        den = std::stod(rest.substr(1));
    }
    return num * M_PI / den;
}

std::vector<double> parse_list(const std::string& text, bool angles = false) {
    std::vector<double> out;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(angles ? parse_angle(tok) : std::stod(tok));
    }
    return out;
}

SolitonSpec spec_from_config(const Config& cfg) {
    auto thetas = parse_list(cfg.poles, true);
    if (cfg.mags.empty()) return SolitonSpec::centered(thetas);
    return SolitonSpec::make(thetas, parse_list(cfg.mags));
}

GridFunction potential_from_config(const Config& cfg, const SpatialGrid& g) {
    if (cfg.potential == "black-soliton") return black_soliton(g);
    if (cfg.potential == "dark-soliton") return dark_soliton(g, parse_angle(cfg.poles));
    if (cfg.potential == "nsoliton") return nsoliton_grid(spec_from_config(cfg), g, 0.0);
    if (cfg.potential == "tanh-gaussian") return tanh_gaussian(g, cfg.amp, cfg.sigma);
    if (cfg.potential == "tanh-compact-bump") return tanh_compact_bump(g, cfg.amp, 0.0);
    if (fs::exists(cfg.potential)) {
        // CSV rows x,re,im resampled onto the grid
        std::ifstream in(cfg.potential);
        std::string line;
        std::getline(in, line); // header
        SpatialGrid probe = g;
        std::vector<double> xs;
        std::vector<cplx> vs;
        while (std::getline(in, line)) {
            std::stringstream ss(line);
            std::string a, b, c;
            std::getline(ss, a, ',');
            std::getline(ss, b, ',');
            std::getline(ss, c, ',');
            xs.push_back(std::stod(a));
            vs.push_back(cplx{std::stod(b), std::stod(c)});
        }
        GridFunction q(g);
        for (int j = 0; j < g.n; ++j) {
            double x = g.x(j);
            auto it = std::lower_bound(xs.begin(), xs.end(), x);
            if (it == xs.begin()) q.values[j] = vs.front();
            else if (it == xs.end()) q.values[j] = vs.back();
            else {
                size_t i = it - xs.begin();
                double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
                q.values[j] = (1.0 - w) * vs[i - 1] + w * vs[i];
            }
        }
        return q;
    }
    throw CLI::ValidationError("potential", "unknown potential '" + cfg.potential + "'");
}

json manifest_json(const Config& cfg) {
    json m;
    m["schema"] = "nlslab.manifest/1";
    m["command"] = cfg.command;
    m["potential"] = cfg.potential;
    m["amp"] = cfg.amp;
    m["sigma"] = cfg.sigma;
    m["eps"] = cfg.eps;
    m["poles"] = cfg.poles;
    m["mags"] = cfg.mags;
    m["grid_L"] = cfg.grid_L;
    m["grid_n"] = cfg.grid_n;
    m["dt"] = cfg.dt;
    m["z_nodes"] = cfg.z_nodes;
    m["delta0"] = cfg.delta0;
    m["delta1"] = cfg.delta1;
    m["rho"] = cfg.rho;
    m["n_scan"] = cfg.n_scan;
    m["t_final"] = cfg.t_final;
    m["xi_list"] = cfg.xi_list;
    m["t_list"] = cfg.t_list;
    m["eps_list"] = cfg.eps_list;
    m["data_path"] = cfg.data_path;
    m["experiment"] = cfg.experiment;
    return m;
}

int run(const Config& cfg) {
    SpatialGrid grid(-cfg.grid_L, cfg.grid_L, cfg.grid_n);
    fs::create_directories(cfg.out_dir);
    save_text(cfg.out_dir + "/manifest.json", manifest_json(cfg).dump(2));

    if (cfg.command == "scatter") {
        auto q = potential_from_config(cfg, grid);
        auto zgrid = SpectralGrid::make(cfg.delta0, cfg.delta1, cfg.z_nodes);
        ForwardOptions opts;
        opts.n_scan = cfg.n_scan;
        auto data = forward_scattering(q, zgrid, opts);
        save_text(cfg.out_dir + "/scattering.json", scattering_data_to_json(data));
        std::cout << "poles:";
        for (int k = 0; k < data.discrete.size(); ++k)
            std::cout << " theta=" << data.discrete.thetas[k] << " |c|=" << std::abs(data.discrete.c[k]);
        std::cout << "\ntheta-condition residual: " << theta_condition_residual(data) << "\n";
        return 0;
    }

    if (cfg.command == "synthesize") {
        auto spec = spec_from_config(cfg);
        auto q = nsoliton_grid(spec, grid, cfg.t_final);
        write_snapshot_csv(cfg.out_dir + "/nsoliton.csv", q);
        save_text(cfg.out_dir + "/soliton_spec.json", soliton_spec_to_json(spec));
        return 0;
    }

    if (cfg.command == "evolve") {
        auto q0 = potential_from_config(cfg, grid);
        MassTrace trace;
        std::vector<double> times;
        if (cfg.snapshot_every > 0.0)
            for (double t = cfg.snapshot_every; t <= cfg.t_final + 1e-12; t += cfg.snapshot_every)
                times.push_back(t);
        else
            times.push_back(cfg.t_final);
        auto snaps = evolve_snapshots(q0, times, cfg.dt, &trace);
        for (size_t i = 0; i < snaps.size(); ++i) {
            char name[64];
            std::snprintf(name, sizeof(name), "/snapshot_%05.2f.csv", times[i]);
            write_snapshot_csv(cfg.out_dir + name, snaps[i]);
        }
        std::ofstream mass(cfg.out_dir + "/mass.csv");
        mass << "t,mass\n";
        mass.precision(12);
        for (size_t i = 0; i < trace.t.size(); ++i) mass << trace.t[i] << ',' << trace.mass[i] << '\n';
        double drift = 0.0;
        for (double m : trace.mass) drift = std::max(drift, std::abs(m - trace.mass.front()));
        std::cout << "mass drift: " << drift << "\n";
        return 0;
    }

    if (cfg.command == "predict") {
        if (cfg.data_path.empty()) throw CLI::ValidationError("data", "--data required for predict");
        auto data = scattering_data_from_json(load_text(cfg.data_path));
        auto mod = modulated_spec(data);
        double rho = cfg.rho > 0.0 ? cfg.rho : default_rho(data.discrete);
        std::ofstream out(cfg.out_dir + "/prediction.csv");
        out << "x,re_pred,im_pred,re_leading,im_leading\n";
        out.precision(12);
        double t = cfg.t_final;
        for (double xi = -0.8; xi <= 0.8 + 1e-12; xi += 0.005) {
            double x = 2.0 * xi * t;
            cplx p = asymptotic_predictor(data, mod, x, t);
            auto asym = partition_and_phase(data, xi, rho);
            cplx l = leading_order(asym, data, x, t);
            out << x << ',' << p.real() << ',' << p.imag() << ',' << l.real() << ',' << l.imag() << '\n';
        }
        return 0;
    }

    if (cfg.command == "experiment") {
        ExperimentOptions opts;
        opts.delta0 = cfg.delta0;
        opts.delta1 = cfg.delta1;
        opts.z_per_side = cfg.z_nodes;
        opts.n_scan = cfg.n_scan;
        opts.dt = cfg.dt;
        ExperimentReport rep;
        if (cfg.experiment == "theorem1") {
            auto q0 = potential_from_config(cfg, grid);
            rep = verify_theorem1(q0, parse_list(cfg.xi_list), parse_list(cfg.t_list), opts);
        } else if (cfg.experiment == "theorem2") {
            auto spec = spec_from_config(cfg);
            auto f = tanh_gaussian(grid, 1.0); // unit perturbation profile
            for (int j = 0; j < grid.n; ++j) f.values[j] -= std::tanh(grid.x(j));
            rep = verify_theorem2(spec, f, cfg.eps, opts);
        } else if (cfg.experiment == "appendixC") {
            auto f = sample_potential(grid, [](double x) { return I * bump_value(x, 0.0, 1.0); });
            rep = appendixC_zero(f, parse_list(cfg.eps_list), opts);
        } else if (cfg.experiment == "coeffevo") {
            auto q0 = potential_from_config(cfg, grid);
            rep = coeffevo_check(q0, cfg.t_final, opts);
        } else {
            throw CLI::ValidationError("experiment", "unknown experiment '" + cfg.experiment + "'");
        }
        save_text(cfg.out_dir + "/report.json", rep.to_json());
        rep.write_csv(cfg.out_dir + "/report.csv");
        std::cout << rep.name << ": " << (rep.pass ? "pass" : "FAIL")
                  << (rep.inconclusive ? " (inconclusive)" : "")
                  << "  slope=" << rep.fitted_slope << "  runtime=" << rep.runtime_seconds << "s\n";
        return rep.pass ? 0 : 1;
    }

    throw CLI::ValidationError("command", "unknown command");
}

} // namespace

bool apply_config_file(Config& cfg, const std::string& path) {
    auto j = json::parse(load_text(path));
    for (auto& [key, value] : j.items()) {
        if (key == "schema" || key == "command") continue;
        else if (key == "potential") cfg.potential = value.get<std::string>();
        else if (key == "amp") cfg.amp = value.get<double>();
        else if (key == "sigma") cfg.sigma = value.get<double>();
        else if (key == "eps") cfg.eps = value.get<double>();
        else if (key == "poles") cfg.poles = value.get<std::string>();
        else if (key == "mags") cfg.mags = value.get<std::string>();
        else if (key == "grid_L") cfg.grid_L = value.get<double>();
        else if (key == "grid_n") cfg.grid_n = value.get<int>();
        else if (key == "dt") cfg.dt = value.get<double>();
        else if (key == "z_nodes") cfg.z_nodes = value.get<int>();
        else if (key == "delta0") cfg.delta0 = value.get<double>();
        else if (key == "delta1") cfg.delta1 = value.get<double>();
        else if (key == "rho") cfg.rho = value.get<double>();
        else if (key == "n_scan") cfg.n_scan = value.get<int>();
        else if (key == "t_final") cfg.t_final = value.get<double>();
        else if (key == "snapshot_every") cfg.snapshot_every = value.get<double>();
        else if (key == "xi_list") cfg.xi_list = value.get<std::string>();
        else if (key == "t_list") cfg.t_list = value.get<std::string>();
        else if (key == "eps_list") cfg.eps_list = value.get<std::string>();
        else if (key == "data_path") cfg.data_path = value.get<std::string>();
        else if (key == "experiment") cfg.experiment = value.get<std::string>();
        else {
            std::cerr << "config error: unknown key '" << key << "'\n";
            return false;
        }
    }
    return true;
}

int main(int argc, char** argv) {
    CLI::App app{"computational laboratory for defocusing NLS with finite-density data"};
    app.require_subcommand(1);

    Config cfg;
    std::string config_path;

    // config file seeds the defaults; explicit flags then override
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    if (!config_path.empty()) {
        try {
            if (!apply_config_file(cfg, config_path)) return 2;
        } catch (const std::exception& e) {
            std::cerr << "config error: " << e.what() << "\n";
            return 2;
        }
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file; flags override its values");
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_option("--grid-L", cfg.grid_L, "half-width of the spatial box");
        sub->add_option("--grid-n", cfg.grid_n, "grid samples (power of two)");
        sub->add_option("--dt", cfg.dt, "time step");
        sub->add_option("--z-nodes", cfg.z_nodes, "spectral nodes per side");
        sub->add_option("--delta0", cfg.delta0, "exclusion half-width around z = 0");
        sub->add_option("--delta1", cfg.delta1, "exclusion half-width around z = +-1");
        sub->add_option("--rho", cfg.rho, "pole-strip half-width (0: automatic)");
        sub->add_option("--n-scan", cfg.n_scan, "circle scan resolution");
        sub->add_option("--potential", cfg.potential,
                        "black-soliton | dark-soliton | nsoliton | tanh-gaussian | tanh-compact-bump | CSV path");
        sub->add_option("--amp", cfg.amp, "perturbation amplitude");
        sub->add_option("--sigma", cfg.sigma, "gaussian width");
        sub->add_option("--poles", cfg.poles, "comma list of circle angles, e.g. 'pi/3,2pi/3'");
        sub->add_option("--mags", cfg.mags, "comma list of |c_k| (default 2 Im z_k)");
        sub->add_option("--t", cfg.t_final, "final/evaluation time");
    };

    auto* sc = app.add_subcommand("scatter", "forward scattering transform");
    auto* sy = app.add_subcommand("synthesize", "exact N-soliton sample");
    auto* ev = app.add_subcommand("evolve", "split-step evolution");
    auto* pr = app.add_subcommand("predict", "long-time predictor from scattering data");
    auto* ex = app.add_subcommand("experiment", "scripted verification runs");
    for (auto* sub : {sc, sy, ev, pr, ex}) add_common(sub);
    ev->add_option("--snapshot-every", cfg.snapshot_every, "snapshot interval (0: final only)");
    pr->add_option("--data", cfg.data_path, "scattering.json produced by scatter");
    ex->add_option("name", cfg.experiment, "theorem1 | theorem2 | appendixC | coeffevo");
    ex->add_option("--eps", cfg.eps, "perturbation size");
    ex->add_option("--eps-list", cfg.eps_list, "comma list of eps values");
    ex->add_option("--xi-list", cfg.xi_list, "comma list of xi samples");
    ex->add_option("--t-list", cfg.t_list, "comma list of evaluation times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (auto* sub : {sc, sy, ev, pr, ex})
        if (sub->parsed()) cfg.command = sub->get_name();

    try {
        return run(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
