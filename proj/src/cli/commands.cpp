#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qscatter/cli.hpp"
#include "qscatter/experiments.hpp"
#include "qscatter/io.hpp"

namespace qscatter::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Bad flags, bad config values, out-of-domain physical parameters.
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    double u0 = 1.0;
    double g = 0.0;
    std::string e_exc = "0";
    double k = 0.0;
    double k1 = 0.5;
    double k2 = 1.5;
    double k_min = 0.05;
    double k_max = 3.0;
    std::optional<double> dk_min;
    double dk_max = 2.0;
    double g_min = 0.0;
    double g_max = 3.0;
    std::size_t steps = 2;
    std::size_t k_count = 32;
    std::string g_values = "0,0.25,0.5,1,2";
    std::string guess = "0+0.4i";
    std::optional<double> tol;
    unsigned threads = 0;
    std::string format = "text";
    std::string output;
    std::string input;
    std::string title;
    std::string config;
    std::string save_config;
};

// Resolved inputs in config-file form; re-feeding them reproduces the run.
using Echo = std::map<std::string, std::string>;

std::string num(double v) { return io::format_number(v); }

Json number_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

double scalar_e_exc(const Options& o) {
    try {
        return io::parse_number(o.e_exc);
    } catch (const io::ParseError& e) {
        throw UsageError(std::string("--e-exc: ") + e.what());
    }
}

std::vector<double> list_option(const std::string& text, const char* flag) {
    try {
        return io::parse_list(text);
    } catch (const io::ParseError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

ScattererParams make_params(double u0, double g, double e_exc) {
    try {
        return ScattererParams(u0, g, e_exc);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

void require_momentum(double k, const char* flag) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw UsageError(std::string(flag) + " must be a finite momentum > 0");
    }
}

void require_format(const Options& o, std::initializer_list<std::string_view> allowed) {
    if (std::find(allowed.begin(), allowed.end(), o.format) == allowed.end()) {
        std::string list;
        for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
        throw UsageError("--format must be one of: " + list);
    }
}

Json envelope(const std::string& command, const Echo& echo, const Options& o) {
    Json j;
    j["tool"] = std::string(kToolName);
    j["version"] = std::string(kVersion);
    j["command"] = command;
    Json input = Json::object();
    for (const auto& [key, value] : echo) input[key] = value;
    input["format"] = o.format;
    j["input"] = input;
    return j;
}

void emit(const Options& o, const std::string& content, std::ostream& out) {
    if (o.output.empty() || o.output == "-") {
        out << content;
    } else {
        io::write_file_atomic(o.output, content);
    }
}

void maybe_save_config(const Options& o, Echo echo) {
    if (o.save_config.empty()) return;
    echo["format"] = o.format;
    io::write_file_atomic(o.save_config, io::format_config(echo));
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- amp -------------------------------------------------------------------

int cmd_amp(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    require_momentum(o.k, "--k");
    const ScattererParams p = make_params(o.u0, o.g, scalar_e_exc(o));
    const Echo echo = {{"u0", num(o.u0)}, {"g", num(o.g)}, {"e_exc", num(p.e_exc())}, {"k", num(o.k)}};
    maybe_save_config(o, echo);

    const auto start = Clock::now();
    const ChannelAmplitudes a = amplitudes(p, o.k);
    const Complex ke = excited_momentum(p, o.k);
    const std::vector<std::pair<std::string, double>> fields = {
        {"k", o.k},
        {"k_e_re", ke.real()},
        {"k_e_im", ke.imag()},
        {"r_re", a.r.real()},
        {"r_im", a.r.imag()},
        {"t_re", a.t.real()},
        {"t_im", a.t.imag()},
        {"r2", a.reflectance()},
        {"t2", a.transmittance()},
        {"sum", a.intensity()},
    };
    if (o.format == "json") {
        Json j = envelope("amp", echo, o);
        Json result = Json::object();
        for (const auto& [name, v] : fields) result[name] = v;
        j["result"] = result;
        j["timing"] = {{"wall_seconds", seconds_since(start)}};
        emit(o, j.dump(2) + "\n", out);
    } else {
        std::string text;
        for (const auto& [name, v] : fields) text += name + " = " + num(v) + "\n";
        emit(o, text, out);
    }
    return kExitOk;
}

// ---- conc ------------------------------------------------------------------

std::string sector_text(const std::optional<double>& v) { return v ? num(*v) : "empty"; }

Json sector_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

int cmd_conc(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    require_momentum(o.k1, "--k1");
    require_momentum(o.k2, "--k2");
    const ScattererParams p = make_params(o.u0, o.g, scalar_e_exc(o));
    const Echo echo = {{"u0", num(o.u0)},
                       {"g", num(o.g)},
                       {"e_exc", num(p.e_exc())},
                       {"k1", num(o.k1)},
                       {"k2", num(o.k2)}};
    maybe_save_config(o, echo);

    const auto start = Clock::now();
    const ConcurrenceReport report = analyze(TwoParticleInput(p, o.k1, o.k2));
    if (o.format == "json") {
        Json j = envelope("conc", echo, o);
        j["result"] = {{"eta_full", report.eta_full},
                       {"eta_postselected", report.eta_postselected},
                       {"sector_LL", sector_json(report.sectors.both_left)},
                       {"sector_RR", sector_json(report.sectors.both_right)},
                       {"sector_LR", sector_json(report.sectors.one_each)},
                       {"gamma_norm", report.gamma_norm}};
        j["timing"] = {{"wall_seconds", seconds_since(start)}};
        emit(o, j.dump(2) + "\n", out);
    } else {
        std::string text;
        text += "eta_full = " + num(report.eta_full) + "\n";
        text += "eta_postselected = " + num(report.eta_postselected) + "\n";
        text += "sector_LL = " + sector_text(report.sectors.both_left) + "\n";
        text += "sector_RR = " + sector_text(report.sectors.both_right) + "\n";
        text += "sector_LR = " + sector_text(report.sectors.one_each) + "\n";
        text += "gamma_norm = " + num(report.gamma_norm) + "\n";
        emit(o, text, out);
    }
    return kExitOk;
}

// ---- sweep -----------------------------------------------------------------

struct SweepSetup {
    SweepSpec spec;
    Echo echo;
    io::SvgOptions svg;
};

SweepSetup sweep_setup(const std::string& mode, const Options& o) {
    SweepSetup s;
    SweepSpec& spec = s.spec;
    spec.threads = o.threads;
    spec.range.steps = o.steps;
    s.echo = {{"u0", num(o.u0)}, {"g", num(o.g)}, {"steps", std::to_string(o.steps)}};

    if (mode == "k") {
        spec.kind = SweepKind::TransmissionVsK;
        spec.params = make_params(o.u0, o.g, scalar_e_exc(o));
        spec.range.lo = o.k_min;
        spec.range.hi = o.k_max;
        s.echo["e_exc"] = num(spec.params.e_exc());
        s.echo["k_min"] = num(o.k_min);
        s.echo["k_max"] = num(o.k_max);
        s.svg = {"Reflection and transmission vs k", "k", "probability"};
    } else if (mode == "dk") {
        require_momentum(o.k1, "--k1");
        spec.kind = SweepKind::ConcurrenceVsDk;
        spec.extra = list_option(o.e_exc, "--e-exc");
        spec.params = make_params(o.u0, o.g, spec.extra.empty() ? 0.0 : spec.extra.front());
        spec.k1 = o.k1;
        spec.range.hi = o.dk_max;
        spec.range.lo = o.dk_min.value_or(o.steps > 0 ? o.dk_max / static_cast<double>(o.steps) : 0.0);
        s.echo["e_exc"] = io::format_list(spec.extra);
        s.echo["k1"] = num(o.k1);
        s.echo["dk_min"] = num(spec.range.lo);
        s.echo["dk_max"] = num(o.dk_max);
        s.svg = {"Post-selected concurrence vs dk", "dk / u0", "concurrence"};
    } else if (mode == "g") {
        require_momentum(o.k1, "--k1");
        require_momentum(o.k2, "--k2");
        spec.kind = SweepKind::ConcurrenceVsG;
        spec.extra = list_option(o.e_exc, "--e-exc");
        spec.params = make_params(o.u0, 0.0, spec.extra.empty() ? 0.0 : spec.extra.front());
        spec.k1 = o.k1;
        spec.k2 = o.k2;
        spec.range.lo = o.g_min;
        spec.range.hi = o.g_max;
        s.echo.erase("g");
        s.echo["e_exc"] = io::format_list(spec.extra);
        s.echo["k1"] = num(o.k1);
        s.echo["k2"] = num(o.k2);
        s.echo["g_min"] = num(o.g_min);
        s.echo["g_max"] = num(o.g_max);
        s.svg = {"Post-selected concurrence vs g", "g = u1 / u0", "concurrence"};
    } else {
        throw UsageError("sweep mode must be one of: k, dk, g");
    }
    try {
        spec.validate();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    return s;
}

std::string table_json(const SweepTable& table, Json j) {
    Json columns = Json::array({table.x_name});
    for (const auto& c : table.columns) columns.push_back(c);
    Json rows = Json::array();
    Json flags = Json::array();
    for (const auto& row : table.rows) {
        Json r = Json::array({row.x});
        for (double v : row.values) r.push_back(number_or_null(v));
        rows.push_back(std::move(r));
        flags.push_back(row.flags);
    }
    j["columns"] = std::move(columns);
    j["rows"] = std::move(rows);
    j["flags"] = std::move(flags);
    return j.dump(2) + "\n";
}

int cmd_sweep(const std::string& mode, const Options& o, std::ostream& out) {
    require_format(o, {"csv", "json", "svg"});
    const SweepSetup setup = sweep_setup(mode, o);
    maybe_save_config(o, setup.echo);

    const auto start = Clock::now();
    const SweepTable table = run_sweep(setup.spec);
    std::string content;
    if (o.format == "csv") {
        content = io::to_csv(table);
    } else if (o.format == "svg") {
        content = io::render_svg(table, setup.svg);
    } else {
        Json j = envelope("sweep " + mode, setup.echo, o);
        j["timing"] = {{"wall_seconds", seconds_since(start)}};
        content = table_json(table, std::move(j));
    }
    emit(o, content, out);
    return kExitOk;
}

// ---- poles -----------------------------------------------------------------

int cmd_poles(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    const ScattererParams p = make_params(o.u0, o.g, scalar_e_exc(o));
    std::vector<Complex> guesses;
    std::stringstream ss(o.guess);
    for (std::string part; std::getline(ss, part, ',');) {
        try {
            guesses.push_back(io::parse_complex(part));
        } catch (const io::ParseError& e) {
            throw UsageError(std::string("--guess: ") + e.what());
        }
    }
    const Echo echo = {{"u0", num(o.u0)}, {"g", num(o.g)}, {"e_exc", num(p.e_exc())}, {"guess", o.guess}};
    maybe_save_config(o, echo);

    const auto start = Clock::now();
    std::vector<PoleLocation> poles;
    for (Complex guess : guesses) poles.push_back(find_pole(p, guess));

    if (o.format == "json") {
        Json j = envelope("poles", echo, o);
        Json list = Json::array();
        for (std::size_t i = 0; i < poles.size(); ++i) {
            list.push_back({{"guess_re", guesses[i].real()},
                            {"guess_im", guesses[i].imag()},
                            {"k_re", poles[i].k.real()},
                            {"k_im", poles[i].k.imag()},
                            {"abs_k", std::abs(poles[i].k)},
                            {"residual", poles[i].residual},
                            {"iterations", poles[i].iterations}});
        }
        j["result"] = {{"poles", list}};
        j["timing"] = {{"wall_seconds", seconds_since(start)}};
        emit(o, j.dump(2) + "\n", out);
    } else {
        std::string text;
        for (std::size_t i = 0; i < poles.size(); ++i) {
            text += "guess = " + io::format_complex(guesses[i]) + "\n";
            text += "k = " + io::format_complex(poles[i].k) + "\n";
            text += "abs_k = " + num(std::abs(poles[i].k)) + "\n";
            text += "residual = " + num(poles[i].residual) + "\n";
            text += "iterations = " + std::to_string(poles[i].iterations) + "\n";
        }
        emit(o, text, out);
    }
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out) {
    require_format(o, {"text", "json"});
    VerifyGrid grid;
    grid.u0 = o.u0;
    make_params(o.u0, 0.0, 0.0);
    grid.g = list_option(o.g_values, "--g-values");
    grid.e_exc = list_option(o.e_exc, "--e-exc");
    for (double g : grid.g) make_params(o.u0, g, 0.0);
    for (double e : grid.e_exc) make_params(o.u0, 0.0, e);
    require_momentum(o.k_min, "--k-min");
    if (!(o.k_max > o.k_min) || o.k_count < 2) {
        throw UsageError("verify needs --k-max > --k-min and --k-count >= 2");
    }
    grid.k = log_space(o.k_min, o.k_max, o.k_count);
    if (o.tol) {
        if (!(*o.tol >= 0.0)) throw UsageError("--tol must be >= 0");
        grid.tolerance_override = *o.tol;
    }
    Echo echo = {{"u0", num(o.u0)},
                 {"g_values", io::format_list(grid.g)},
                 {"e_exc", io::format_list(grid.e_exc)},
                 {"k_min", num(o.k_min)},
                 {"k_max", num(o.k_max)},
                 {"k_count", std::to_string(o.k_count)}};
    if (o.tol) echo["tol"] = num(*o.tol);
    maybe_save_config(o, echo);

    const VerifyReport report = run_verify(grid);
    if (o.format == "json") {
        Json j = envelope("verify", echo, o);
        Json list = Json::array();
        for (const auto& r : report.invariants) {
            list.push_back({{"name", r.name},
                            {"passed", r.passed},
                            {"worst", number_or_null(r.worst)},
                            {"tolerance", r.tolerance},
                            {"checks", r.checks},
                            {"skipped", r.skipped}});
        }
        j["result"] = {{"passed", report.passed()}, {"grid", report.grid}, {"invariants", list}};
        j["timing"] = {{"wall_seconds", report.wall_seconds}};
        emit(o, j.dump(2) + "\n", out);
    } else {
        std::string text;
        for (const auto& r : report.invariants) {
            text += std::string(r.passed ? "PASS" : "FAIL") + "  " + r.name + "  worst=" + num(r.worst) +
                    "  tol=" + num(r.tolerance) + "  checks=" + std::to_string(r.checks) +
                    "  skipped=" + std::to_string(r.skipped) + "\n";
        }
        text += "grid: " + report.grid + "\n";
        text += "wall_seconds: " + num(report.wall_seconds) + "\n";
        text += std::string("result: ") + (report.passed() ? "PASS" : "FAIL") + "\n";
        emit(o, text, out);
    }
    return report.passed() ? kExitOk : kExitComputation;
}

// ---- plot ------------------------------------------------------------------

int cmd_plot(const Options& o, std::ostream& out) {
    if (o.input.empty()) throw UsageError("plot needs --input <file.csv>");
    SweepTable table;
    try {
        table = io::parse_csv(io::read_file(o.input));
    } catch (const io::ParseError& e) {
        throw UsageError(std::string(o.input) + ": " + e.what());
    }
    emit(o, io::render_svg(table, {o.title, table.x_name, ""}), out);
    return kExitOk;
}

// ---- dispatch --------------------------------------------------------------

void add_common(CLI::App& app, Options& o) {
    app.add_option("--u0", o.u0, "delta strength u0 (momentum units)");
    app.add_option("--format", o.format, "output format");
    app.add_option("-o,--output", o.output, "output path (default: stdout)");
    app.add_option("--config", o.config, "config file (key = value lines)");
    app.add_option("--save-config", o.save_config, "write the resolved inputs as a config file");
}

void build_app(CLI::App& app, const std::string& command, const std::string& mode, Options& o) {
    add_common(app, o);
    if (command == "amp") {
        app.add_option("--g", o.g, "inelastic coupling g = u1/u0");
        app.add_option("--e-exc", o.e_exc, "excitation energy in units of 4 E_bind");
        app.add_option("--k", o.k, "incident momentum")->required();
    } else if (command == "conc") {
        app.add_option("--g", o.g, "inelastic coupling g = u1/u0");
        app.add_option("--e-exc", o.e_exc, "excitation energy in units of 4 E_bind");
        app.add_option("--k1", o.k1, "first momentum")->required();
        app.add_option("--k2", o.k2, "second momentum")->required();
    } else if (command == "sweep") {
        app.add_option("--threads", o.threads, "worker threads (0 = all cores)");
        app.add_option("--steps", o.steps, "grid points");
        app.add_option("--e-exc", o.e_exc, mode == "k" ? "excitation energy" : "comma-separated e_exc curves");
        if (mode == "k") {
            app.add_option("--g", o.g, "inelastic coupling g = u1/u0");
            app.add_option("--k-min", o.k_min, "lowest momentum");
            app.add_option("--k-max", o.k_max, "highest momentum");
        } else if (mode == "dk") {
            app.add_option("--g", o.g, "inelastic coupling g = u1/u0");
            app.add_option("--k1", o.k1, "fixed first momentum");
            app.add_option("--dk-min", o.dk_min, "smallest dk/u0 (default dk-max/steps)");
            app.add_option("--dk-max", o.dk_max, "largest dk/u0");
        } else if (mode == "g") {
            app.add_option("--k1", o.k1, "first momentum");
            app.add_option("--k2", o.k2, "second momentum");
            app.add_option("--g-min", o.g_min, "smallest g");
            app.add_option("--g-max", o.g_max, "largest g");
        }
    } else if (command == "poles") {
        app.add_option("--g", o.g, "inelastic coupling g = u1/u0");
        app.add_option("--e-exc", o.e_exc, "excitation energy in units of 4 E_bind");
        app.add_option("--guess", o.guess, "starting momenta, e.g. 0+0.4i (comma-separated)");
    } else if (command == "verify") {
        app.add_option("--g-values", o.g_values, "comma-separated g grid");
        app.add_option("--e-exc", o.e_exc, "comma-separated e_exc grid");
        app.add_option("--k-min", o.k_min, "smallest grid momentum");
        app.add_option("--k-max", o.k_max, "largest grid momentum");
        app.add_option("--k-count", o.k_count, "log-spaced momenta");
        app.add_option("--tol", o.tol, "override every invariant tolerance");
    } else if (command == "plot") {
        app.add_option("-i,--input", o.input, "CSV produced by `sweep`")->required();
        app.add_option("--title", o.title, "chart title");
    }
}

Options defaults_for(const std::string& command, const std::string& mode) {
    Options o;
    if (command == "sweep") {
        o.format = "csv";
        if (mode == "k") {
            o.g = 0.5;
            o.e_exc = "1";
            o.k_min = 0.05;
            o.k_max = 3.0;
            o.steps = 256;
        } else if (mode == "dk") {
            o.g = 0.5;
            o.e_exc = io::format_list({kRegimeOpen, kRegimeCrossing, kRegimeClosed});
            o.k1 = 0.5;
            o.steps = 400;
        } else {
            o.e_exc = "0,0.125,0.5,1";
            o.k1 = 0.5;
            o.k2 = 1.5;
            o.g_max = 3.0;
            o.steps = 301;
        }
    } else if (command == "verify") {
        o.e_exc = "0,0.125,0.25,0.5,1";
        o.k_min = 0.05;
        o.k_max = 4.0;
    }
    return o;
}

std::string usage() {
    return std::string(kToolName) + " " + std::string(kVersion) +
           " - inelastic point-scatterer amplitudes and two-fermion concurrence\n\n"
           "usage: qscatter <command> [options]\n\n"
           "commands:\n"
           "  amp                 one-particle amplitudes at --k\n"
           "  conc                concurrence report for --k1, --k2\n"
           "  sweep k|dk|g        parameter sweeps (csv, json or svg)\n"
           "  poles               S-matrix poles from --guess\n"
           "  verify              invariant suite over a parameter grid\n"
           "  plot                render a sweep CSV as SVG\n\n"
           "Run `qscatter <command> --help` for the options of a command.\n"
           "Config files hold `key = value` lines (keys are flag names with '-' -> '_');\n"
           "flags override the file. " + std::string(kConfigEnv) + " names a default config file.\n";
}

std::optional<std::string> config_path(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
    }
    if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') return std::string(env);
    return std::nullopt;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << usage();
        return kExitUsage;
    }
    const std::string& command = args[0];
    if (command == "--help" || command == "-h" || command == "help") {
        out << usage();
        return kExitOk;
    }
    if (command == "--version") {
        out << kToolName << " " << kVersion << "\n";
        return kExitOk;
    }
    static const std::vector<std::string> kCommands = {"amp", "conc", "sweep", "poles", "verify", "plot"};
    if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end()) {
        err << "unknown command '" << command << "'\n\n" << usage();
        return kExitUsage;
    }

    std::size_t first_flag = 1;
    std::string mode;
    if (command == "sweep") {
        if (args.size() < 2 || (args[1] != "k" && args[1] != "dk" && args[1] != "g")) {
            err << "usage: qscatter sweep {k|dk|g} [options]\n";
            return kExitUsage;
        }
        mode = args[1];
        first_flag = 2;
    }
    const std::vector<std::string> user_args(args.begin() + static_cast<std::ptrdiff_t>(first_flag), args.end());

    Options o = defaults_for(command, mode);
    CLI::App app{"qscatter " + command + (mode.empty() ? "" : " " + mode), "qscatter " + command};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    build_app(app, command, mode, o);

    // Config entries precede the explicit flags.
    std::vector<std::string> merged;
    if (auto path = config_path(user_args)) {
        std::map<std::string, std::string> entries;
        try {
            entries = io::load_config(*path);
        } catch (const io::IoError& e) {
            throw UsageError(std::string("config: ") + e.what());
        }
        for (const auto& [key, value] : entries) {
            std::string flag = "--" + key;
            std::replace(flag.begin(), flag.end(), '_', '-');
            if (flag == "--config" || app.get_option_no_throw(flag) == nullptr) continue;
            merged.push_back(flag);
            merged.push_back(value);
        }
    }
    merged.insert(merged.end(), user_args.begin(), user_args.end());
    std::reverse(merged.begin(), merged.end());
    try {
        app.parse(merged);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (command == "amp") return cmd_amp(o, out);
    if (command == "conc") return cmd_conc(o, out);
    if (command == "sweep") return cmd_sweep(mode, o, out);
    if (command == "poles") return cmd_poles(o, out);
    if (command == "verify") return cmd_verify(o, out);
    return cmd_plot(o, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const io::IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace qscatter::cli
