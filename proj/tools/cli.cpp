#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tomolight/beamsplitter.hpp"
#include "tomolight/decoherence.hpp"
#include "tomolight/entropy.hpp"
#include "tomolight/fock_core.hpp"
#include "tomolight/kerr_dynamics.hpp"
#include "tomolight/phase_space.hpp"
#include "tomolight/quadrature.hpp"
#include "tomolight/states.hpp"
#include "tomolight/tomography.hpp"

namespace tomolight::cli {

using nlohmann::json;

#define TL_FIELDS(X)                                                                                           \
    X(l) X(h) X(nbar) X(delta) X(chi) X(t) X(k) X(t_end) X(samples) X(model) X(scaled_time) X(n_theta) X(x_max) \
        X(n_x) X(extent) X(n_phase) X(theta1) X(theta2) X(x2) X(max_order) X(zeta) X(cutoff) X(epsilon) X(out) \
            X(seed)

void to_json(json& j, const RunConfig& c) {
    j = json::object();
    j["command"] = c.command;
#define TL_PUT(name) j[#name] = c.name;
    TL_FIELDS(TL_PUT)
#undef TL_PUT
}

void from_json(const json& j, RunConfig& c) {
    if (j.contains("command")) j.at("command").get_to(c.command);
#define TL_GET(name) \
    if (j.contains(#name)) j.at(#name).get_to(c.name);
    TL_FIELDS(TL_GET)
#undef TL_GET
}

namespace {

const std::vector<std::pair<std::string, std::string>> kCommands = {
    {"tomogram", "single-mode optical tomogram of a Kerr-evolved cat state"},
    {"tomogram2", "two-mode tomogram slice at fixed local oscillator phases"},
    {"wigner", "Wigner function on the phase plane"},
    {"husimi", "Husimi Q function on the phase plane"},
    {"evolve-moments", "time series of <a^m> and quadrature moments"},
    {"renyi", "time series of the Renyi entropic uncertainty sum"},
    {"entangle", "time series of beam-splitter entanglement entropy"},
    {"decohere", "log-negativity and purity under amplitude or phase damping"},
    {"conditional", "state of mode c conditioned on a mode-d homodyne outcome"},
};

void check(bool ok, const std::string& msg) {
    if (!ok) throw InvalidArgument(msg);
}

}  // namespace

void validate(const RunConfig& c) {
    check(std::any_of(kCommands.begin(), kCommands.end(), [&](const auto& kc) { return kc.first == c.command; }),
          "unknown command '" + c.command + "'");
    check(c.l >= 1, "--l must be >= 1");
    check(c.h >= 0 && c.h < c.l, "--h must lie in [0, l-1]");
    check(c.nbar >= 0.0 && c.nbar <= 1e4, "--nbar must lie in [0, 1e4]");
    check(std::isfinite(c.delta), "--delta must be finite");
    check(c.chi > 0.0, "--chi must be positive");
    check(c.t >= 0.0 && std::isfinite(c.t), "--t must be finite and >= 0");
    check(c.k >= 0, "--k must be >= 0");
    check(c.t_end > 0.0 && std::isfinite(c.t_end), "--t-end must be positive");
    check(c.samples >= 2, "--samples must be >= 2");
    check(c.model.empty() || c.model == "amp" || c.model == "phase", "--model must be 'amp' or 'phase'");
    check(c.scaled_time >= 0.0 && std::isfinite(c.scaled_time), "--scaled-time must be finite and >= 0");
    check(c.n_theta >= 1, "--n-theta must be >= 1");
    check(c.x_max > 0.0, "--x-max must be positive");
    check(c.n_x >= 3 && c.n_x % 2 == 1, "--n-x must be odd and >= 3");
    check(c.extent > 0.0, "--extent must be positive");
    check(c.n_phase >= 3, "--n-phase must be >= 3");
    check(c.max_order >= 1 && c.max_order <= 12, "--max-order must lie in [1, 12]");
    check(c.zeta > 0.5 && c.zeta != 1.0, "--zeta must exceed 1/2 and differ from 1");
    check(c.cutoff >= 0 && c.cutoff <= 4096, "--cutoff must lie in [0, 4096]");
    check(c.epsilon > 0.0 && c.epsilon <= 1e-3, "--epsilon must lie in (0, 1e-3]");
    check(!c.out.empty(), "--out must not be empty");
    if (c.command == "decohere") check(!c.model.empty(), "decohere needs --model amp|phase");
}

std::string sidecar_path(const std::string& csv_path) {
    std::filesystem::path p(csv_path);
    p.replace_extension(".json");
    return p.string();
}

namespace {

class Csv {
public:
    explicit Csv(const std::string& header) { buf_ << "# schema=" << kSchema << '\n' << header << '\n'; }

    void row(std::initializer_list<double> values) {
        bool first = true;
        char tmp[40];
        for (double v : values) {
            std::snprintf(tmp, sizeof tmp, "%.17g", v);
            if (!first) buf_ << ',';
            buf_ << tmp;
            first = false;
        }
        buf_ << '\n';
    }

    std::string str() const { return buf_.str(); }

private:
    std::ostringstream buf_;
};

void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::ios_base::failure("cannot open " + tmp);
        f << content;
        f.flush();
        if (!f) throw std::ios_base::failure("write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

CatSpec cat_spec(const RunConfig& c) { return CatSpec{c.l, c.h, std::polar(std::sqrt(c.nbar), c.delta)}; }

TruncationPolicy policy(const RunConfig& c) { return TruncationPolicy{c.epsilon, 4096}; }

FockVector evolved_state(const RunConfig& c) {
    const CatSpec spec = cat_spec(c);
    FockVector v = c.cutoff > 0 ? make_cat_at(spec, c.cutoff) : make_cat(spec, policy(c));
    if (c.t != 0.0) v = evolve_kerr(v, KerrParams::at_fraction(c.chi, c.t));
    return v;
}

DecoherenceParams decoherence(const RunConfig& c) {
    return DecoherenceParams{c.model == "amp" ? Channel::AmplitudeDecay : Channel::PhaseDamping, c.scaled_time};
}

QuadratureGrid quad_grid(const RunConfig& c) {
    return make_quadrature_grid(static_cast<std::size_t>(c.n_theta), c.x_max, static_cast<std::size_t>(c.n_x));
}

std::vector<double> time_samples(const RunConfig& c) { return linspace(0.0, c.t_end, static_cast<std::size_t>(c.samples)); }

constexpr int kMaxMixedTwoModeDim = 4096;

TwoModeState two_mode_state(const RunConfig& c) {
    TwoModeState s = bs_transform(evolved_state(c));
    if (c.model.empty()) return s;
    if (s.dim() > kMaxMixedTwoModeDim) {
        throw InvalidArgument("mixed two-mode state of dimension " + std::to_string(s.dim()) +
                              " is too large; lower --cutoff");
    }
    return c.model == "amp" ? two_mode_amp_decay_state(s, decoherence(c)) : two_mode_phase_damp_state(s, decoherence(c));
}

void emit_tomogram(Csv& csv, const TomogramGrid& t) {
    for (std::size_t i = 0; i < t.grid.n_theta(); ++i)
        for (std::size_t j = 0; j < t.grid.n_x(); ++j)
            csv.row({t.grid.theta[i], t.grid.x[j], t.omega(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))});
}

void emit_plane(Csv& csv, const Eigen::MatrixXd& m, const PhasePlaneGrid& g) {
    for (std::size_t i = 0; i < g.n_x(); ++i)
        for (std::size_t j = 0; j < g.n_p(); ++j)
            csv.row({g.x[i], g.p[j], m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))});
}

double mandel_q_of(const DensityMatrix& rho) {
    double n1 = 0.0, n2 = 0.0;
    for (int n = 0; n < rho.dim(); ++n) {
        const double p = rho.elems(n, n).real();
        n1 += n * p;
        n2 += static_cast<double>(n) * n * p;
    }
    return n1 == 0.0 ? 0.0 : (n2 - n1 * n1) / n1 - 1.0;
}

json execute(const RunConfig& c, std::unique_ptr<Csv>& out) {
    json results = json::object();
    auto make = [&](const std::string& header) -> Csv& {
        out = std::make_unique<Csv>(header);
        return *out;
    };

    if (c.command == "tomogram") {
        Csv& csv = make("theta,x,omega");
        const FockVector v = evolved_state(c);
        const QuadratureGrid g = quad_grid(c);
        if (c.model.empty()) {
            emit_tomogram(csv, tomogram_pure(v, g));
        } else {
            const DensityMatrix r0 = density_from_pure(v);
            const DensityMatrix r = c.model == "amp" ? amp_decay_density(r0, decoherence(c)) : phase_damp_density(r0, decoherence(c));
            emit_tomogram(csv, tomogram_density(r, g));
        }
        results["cutoff"] = v.cutoff();
    } else if (c.command == "tomogram2") {
        Csv& csv = make("theta1,x1,theta2,x2,omega");
        const TwoModeState s = two_mode_state(c);
        const std::vector<double> xs = linspace(-c.x_max, c.x_max, static_cast<std::size_t>(c.n_x));
        const Eigen::MatrixXd w = tomogram_two_mode_slice(s, c.theta1, c.theta2, xs, xs);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < xs.size(); ++j)
                csv.row({c.theta1, xs[i], c.theta2, xs[j], w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))});
        results["cutoff"] = s.cutoff1;
    } else if (c.command == "wigner") {
        Csv& csv = make("x,p,value");
        const CatSpec spec = cat_spec(c);
        const CoherentSuperposition s = c.k > 0 ? cat_fractional_revival_state(spec, c.k) : cat_superposition_form(spec);
        const PhasePlaneGrid g = make_phase_plane_grid(c.extent, static_cast<std::size_t>(c.n_phase));
        const Eigen::MatrixXd w = wigner_superposition(s, g);
        emit_plane(csv, w, g);
        results["integral"] = phase_plane_integral(w, g);
    } else if (c.command == "husimi") {
        Csv& csv = make("x,p,value");
        const PhasePlaneGrid g = make_phase_plane_grid(c.extent, static_cast<std::size_t>(c.n_phase));
        const Eigen::MatrixXd q = husimi_q(evolved_state(c), g);
        emit_plane(csv, q, g);
        results["lobes"] = count_lobes(q);
        results["n_max"] = n_max_distinguishable(std::sqrt(c.nbar));
    } else if (c.command == "evolve-moments") {
        Csv& csv = make("t_over_Trev,m,x_moment,p_moment,a_moment_re,a_moment_im");
        RunConfig base = c;
        base.t = 0.0;
        const FockVector v0 = evolved_state(base);
        for (double t : time_samples(c)) {
            const FockVector v = evolve_kerr(v0, KerrParams::at_fraction(c.chi, t));
            for (int m = 1; m <= c.max_order; ++m) {
                const cplx a = moment_a_power(v, m);
                csv.row({t, static_cast<double>(m), moment_x_power(v, m), moment_p_power(v, m), a.real(), a.imag()});
            }
        }
    } else if (c.command == "renyi") {
        Csv& csv = make("t_over_Trev,value");
        RunConfig base = c;
        base.t = 0.0;
        const RenyiOrderPair orders = RenyiOrderPair::from_zeta(c.zeta);
        const std::vector<double> ts = time_samples(c);
        const std::vector<double> r = renyi_sum_timeseries(evolved_state(base), c.chi, ts, orders);
        for (std::size_t i = 0; i < ts.size(); ++i) csv.row({ts[i], r[i]});
        results["bound"] = renyi_bound(orders);
    } else if (c.command == "entangle") {
        Csv& csv = make("t_over_Trev,E");
        RunConfig base = c;
        base.t = 0.0;
        const FockVector v0 = evolved_state(base);
        for (double t : time_samples(c)) {
            csv.row({t, entanglement_entropy(bs_transform(evolve_kerr(v0, KerrParams::at_fraction(c.chi, t)))).value});
        }
        results["cutoff"] = v0.cutoff();
    } else if (c.command == "decohere") {
        Csv& csv = make("tau_scaled,EN");
        const CatSpec spec = cat_spec(c);
        const int cut = c.cutoff > 0 ? c.cutoff : coherent_cutoff(0.5 * c.nbar, policy(c));
        if ((cut + 1) * (cut + 1) > kMaxMixedTwoModeDim) {
            throw InvalidArgument("per-mode cutoff " + std::to_string(cut) + " is too large; lower --cutoff");
        }
        const TwoModeSuperposition form = beam_split_cat_form(spec);
        const TwoModeState pure = to_two_mode(form, cut, cut);
        const std::vector<double> taus = linspace(0.0, c.scaled_time > 0.0 ? c.scaled_time : 1.0,
                                                  static_cast<std::size_t>(c.samples));
        for (double tau : taus) {
            TwoModeState s = c.model == "amp"
                                 ? two_mode_amp_decay(form, DecoherenceParams{Channel::AmplitudeDecay, tau}, cut, cut)
                                 : two_mode_phase_damp_state(pure, DecoherenceParams{Channel::PhaseDamping, tau});
            csv.row({tau, log_negativity(s).value});
        }
        results["cutoff"] = cut;
    } else if (c.command == "conditional") {
        Csv& csv = make("theta,x,omega");
        const TwoModeState s = two_mode_state(c);
        const QuadratureGrid g = quad_grid(c);
        emit_tomogram(csv, conditional_tomogram(s, c.x2, c.theta2, g));
        results["mandel_q"] = s.is_pure() ? mandel_q(conditional_project(s, c.x2, c.theta2))
                                          : mandel_q_of(conditional_density(s, c.x2, c.theta2));
    }
    return results;
}

std::optional<std::string> find_config_flag(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
    }
    return std::nullopt;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidArgument("cannot read config file " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::exception& e) {
        throw InvalidArgument("config file " + path + " is not valid JSON: " + e.what());
    }
    const json& cfg = j.contains("config") ? j.at("config") : j;
    RunConfig c;
    try {
        cfg.get_to(c);
    } catch (const json::exception& e) {
        throw InvalidArgument("config file " + path + " has a bad field: " + e.what());
    }
    return c;
}

void add_options(CLI::App* sub, RunConfig& c, std::string& config_path) {
    sub->set_help_flag("--help", "print this help message and exit");
    sub->add_option("--config", config_path, "re-run from a JSON sidecar or config file");
    sub->add_option("--l", c.l, "number of coherent components");
    sub->add_option("--h", c.h, "parity index in [0, l-1]");
    sub->add_option("--nbar", c.nbar, "|alpha|^2");
    sub->add_option("--delta", c.delta, "argument of alpha (rad)");
    sub->add_option("--chi", c.chi, "Kerr nonlinearity");
    sub->add_option("--t", c.t, "evolution time as a fraction of T_rev");
    sub->add_option("--k", c.k, "fractional-revival order for wigner (0 = initial state)");
    sub->add_option("--t-end", c.t_end, "end of the time series as a fraction of T_rev");
    sub->add_option("--samples", c.samples, "number of time (or tau) samples");
    sub->add_option("--model", c.model, "decoherence model: amp or phase");
    sub->add_option("--scaled-time", c.scaled_time, "gamma tau or kappa tau");
    sub->add_option("--n-theta", c.n_theta, "number of theta samples in [0, 2 pi]");
    sub->add_option("--x-max", c.x_max, "quadrature range [-x_max, x_max]");
    sub->add_option("--n-x", c.n_x, "number of quadrature samples (odd)");
    sub->add_option("--extent", c.extent, "phase-plane range [-extent, extent]");
    sub->add_option("--n-phase", c.n_phase, "phase-plane samples per axis");
    sub->add_option("--theta1", c.theta1, "mode-c local oscillator phase");
    sub->add_option("--theta2", c.theta2, "mode-d local oscillator phase");
    sub->add_option("--x2", c.x2, "measured mode-d quadrature value");
    sub->add_option("--max-order", c.max_order, "highest moment order");
    sub->add_option("--zeta", c.zeta, "position Rényi order (momentum order follows)");
    sub->add_option("--cutoff", c.cutoff, "Fock cutoff (0 = automatic)");
    sub->add_option("--epsilon", c.epsilon, "truncation tail bound");
    sub->add_option("--out", c.out, "output CSV path");
    sub->add_option("--seed", c.seed, "reserved");
}

}  // namespace

int run(const std::vector<std::string>& args_in) {
    std::vector<std::string> args(args_in.begin() + (args_in.empty() ? 0 : 1), args_in.end());
    RunConfig cfg;
    std::string config_path;
    try {
        if (auto p = find_config_flag(args)) cfg = load_config(*p);
    } catch (const Error& e) {
        std::cerr << "tomolight: " << e.what() << '\n';
        return kBadConfig;
    }

    CLI::App app{"tomolight: tomograms, phase-space functions and entanglement of nonclassical light"};
    app.set_help_flag("--help", "print this help message and exit");
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    for (const auto& [name, desc] : kCommands) add_options(app.add_subcommand(name, desc), cfg, config_path);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadConfig;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        validate(cfg);
        std::unique_ptr<Csv> csv;
        const json results = execute(cfg, csv);
        json side;
        side["tool"] = "tomolight";
        side["version"] = kVersion;
        side["schema"] = kSchema;
        side["command"] = cfg.command;
        side["config"] = cfg;
        side["results"] = results;
        write_atomic(cfg.out, csv->str());
        write_atomic(sidecar_path(cfg.out), side.dump(2) + "\n");
    } catch (const InvalidArgument& e) {
        std::cerr << "tomolight: invalid configuration: " << e.what() << '\n';
        return kBadConfig;
    } catch (const Error& e) {
        std::cerr << "tomolight: numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    } catch (const std::exception& e) {
        std::cerr << "tomolight: " << e.what() << '\n';
        return kIoError;
    }
    return kOk;
}

int run(int argc, const char* const* argv) {
    return run(std::vector<std::string>(argv, argv + argc));
}

}  // namespace tomolight::cli
