#include "unruh/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "unruh/errors.hpp"

namespace unruh::cli {

namespace {

using nlohmann::json;

// Error raised for file-system failures so run() can map it to exit 1.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    double omega0{1.0};
    double accel{0.0};
    double si_accel{0.0};
    double coupling{1.0};
    std::string state{"ground"};
    std::string format{"human"};
    std::string output;
    double tol{1e-4};
    std::vector<double> epsilons;
    int points{11};
    std::string scale{"linear"};
    double accel_min{0.0};
    double accel_max{10.0};

    CLI::Option* accel_opt{nullptr};
    CLI::Option* si_accel_opt{nullptr};
    CLI::Option* state_opt{nullptr};
    CLI::Option* epsilons_opt{nullptr};
    CLI::Option* format_opt{nullptr};

    bool accel_given() const { return accel_opt->count() > 0 || si_accel_opt->count() > 0; }

    double resolved_accel() const {
        return si_accel_opt->count() > 0 ? rates::si_acceleration_to_natural(si_accel) : accel;
    }
};

// Writes to --output when given, otherwise to the command's stdout.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw IoError("cannot open output file '" + path + "'");
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

    void close(const std::string& path) {
        if (!file_.is_open()) return;
        file_.close();
        if (file_.fail()) throw IoError("failed writing output file '" + path + "'");
    }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

json row_to_json(const atom::TwoLevelAtom& atom, const RateRow& row) {
    return {
        {"state", std::string(atom::to_string(atom.level))},
        {"omega0", atom.omega0},
        {"accel", row.accel},
        {"coupling", row.rates.coupling},
        {"rate_vf", row.rates.vf},
        {"rate_cross", row.rates.cross},
        {"rate_rr", row.rates.rr},
        {"rate_rr_note", rates::kRadiationReactionNote},
        {"rate_total", row.rates.total},
        {"poly_factor", row.poly_factor},
        {"planck_n", row.planck_n},
        {"effective_temperature", row.t_eff},
    };
}

void write_rate_human(std::ostream& out, const atom::TwoLevelAtom& atom, const RateRow& row) {
    const auto line = [&](const char* key, const std::string& value) {
        out << std::left << std::setw(14) << key << value << "\n";
    };
    line("state", std::string(atom::to_string(atom.level)));
    line("omega0", format_number(atom.omega0, 6));
    line("accel", format_number(row.accel, 6));
    line("coupling", format_number(row.rates.coupling, 6));
    line("rate_vf", format_number(row.rates.vf, 6));
    line("rate_cross", format_number(row.rates.cross, 6));
    line("rate_rr", format_number(row.rates.rr, 6) + " (" + rates::kRadiationReactionNote + ")");
    line("rate_total", format_number(row.rates.total, 6));
    line("poly_factor", format_number(row.poly_factor, 6));
    line("planck_n", format_number(row.planck_n, 6));
    line("T_eff", format_number(row.t_eff, 6));
}

int cmd_rate(const Options& opt, std::ostream& out) {
    const atom::TwoLevelAtom atom{opt.omega0, atom::parse_level(opt.state)};
    atom.validate();
    const RateRow row = evaluate_row(atom, opt.resolved_accel(), opt.coupling);

    Sink sink(opt.output, out);
    switch (parse_format(opt.format)) {
    case Format::human: write_rate_human(sink.stream(), atom, row); break;
    case Format::json: sink.stream() << row_to_json(atom, row).dump(2) << "\n"; break;
    case Format::csv:
        sink.stream() << kCsvHeader << "\n";
        write_csv_row(sink.stream(), row);
        break;
    }
    sink.close(opt.output);
    return kExitOk;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
    SweepSpec spec;
    spec.omega0 = opt.omega0;
    spec.coupling = opt.coupling;
    spec.accel_min = opt.accel_min;
    spec.accel_max = opt.accel_max;
    spec.points = opt.points;
    spec.scale = parse_scale(opt.scale);
    spec.state = atom::parse_level(opt.state);
    spec.validate();

    // Sweeps are CSV unless JSON is requested explicitly.
    const Format format = opt.format_opt->count() > 0 ? parse_format(opt.format) : Format::csv;
    const std::vector<RateRow> rows = run_sweep(spec);

    Sink sink(opt.output, out);
    if (format == Format::json) {
        json arr = json::array();
        const atom::TwoLevelAtom atom{spec.omega0, spec.state};
        for (const auto& row : rows) arr.push_back(row_to_json(atom, row));
        sink.stream() << arr.dump(2) << "\n";
    } else {
        write_sweep_csv(sink.stream(), rows);
    }
    sink.close(opt.output);
    return kExitOk;
}

json report_to_json(const oracle::OracleReport& r) {
    json per_eps = json::array();
    for (std::size_t i = 0; i < r.epsilons.size(); ++i)
        per_eps.push_back({{"epsilon", r.epsilons[i]},
                           {"vf", r.per_epsilon_vf[i]},
                           {"cross", r.per_epsilon_cross[i]}});
    return {
        {"state", std::string(atom::to_string(r.atom.level))},
        {"omega0", r.atom.omega0},
        {"accel", r.accel},
        {"coupling", r.coupling},
        {"numeric_vf", r.numeric_vf},
        {"closed_vf", r.closed_vf},
        {"rel_err_vf", r.rel_err_vf},
        {"residual_vf", r.residual_vf},
        {"numeric_cross", r.numeric_cross},
        {"closed_cross", r.closed_cross},
        {"rel_err_cross", r.rel_err_cross},
        {"residual_cross", r.residual_cross},
        {"per_epsilon", per_eps},
        {"pass", r.pass},
    };
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    oracle::QuadratureConfig cfg;
    cfg.tol = opt.tol;
    if (opt.epsilons_opt->count() > 0) cfg.epsilons = opt.epsilons;
    cfg.validate();

    if (!(opt.omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
    std::vector<double> accels;
    if (opt.accel_given()) {
        accels.push_back(opt.resolved_accel());
    } else {
        for (double ratio : {0.1, 0.3, 1.0, 3.0, 10.0}) accels.push_back(ratio * opt.omega0);
    }
    for (double a : accels)
        if (!(a > 0.0)) throw std::invalid_argument("verify needs a positive acceleration");

    std::vector<atom::Level> levels;
    if (opt.state_opt->count() > 0) levels.push_back(atom::parse_level(opt.state));
    else levels = {atom::Level::ground, atom::Level::excited};

    const Format format = parse_format(opt.format);
    std::vector<oracle::OracleReport> reports;
    std::optional<std::string> failure;
    std::string diagnostics;
    for (double a : accels) {
        for (atom::Level level : levels) {
            try {
                reports.push_back(oracle::verify_rates({opt.omega0, level}, a, opt.coupling, cfg));
            } catch (const ConvergenceError& e) {
                std::ostringstream msg;
                msg << e.what() << " (state=" << atom::to_string(level)
                    << ", accel=" << format_number(a, 6) << ")";
                failure = msg.str();
                diagnostics = e.diagnostics();
                break;
            }
        }
        if (failure) break;
    }

    bool all_pass = !failure.has_value();
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    Sink sink(opt.output, out);
    std::ostream& os = sink.stream();
    if (format == Format::json) {
        json doc;
        doc["tol"] = cfg.tol;
        doc["epsilons"] = cfg.epsilons;
        doc["all_pass"] = all_pass;
        doc["cases"] = json::array();
        for (const auto& r : reports) doc["cases"].push_back(report_to_json(r));
        if (failure) {
            doc["error"] = *failure;
            doc["diagnostics"] = diagnostics;
        }
        os << doc.dump(2) << "\n";
    } else {
        os << std::left << std::setw(9) << "state" << std::setw(12) << "accel" << std::setw(14)
           << "numeric_vf" << std::setw(14) << "closed_vf" << std::setw(12) << "rel_err_vf"
           << std::setw(14) << "numeric_cross" << std::setw(14) << "closed_cross"
           << std::setw(14) << "rel_err_cross"
           << "result\n";
        for (const auto& r : reports) {
            os << std::left << std::setw(9) << atom::to_string(r.atom.level) << std::setw(12)
               << format_number(r.accel, 6) << std::setw(14) << format_number(r.numeric_vf, 6)
               << std::setw(14) << format_number(r.closed_vf, 6) << std::setw(12)
               << format_number(r.rel_err_vf, 3) << std::setw(14)
               << format_number(r.numeric_cross, 6) << std::setw(14)
               << format_number(r.closed_cross, 6) << std::setw(14)
               << format_number(r.rel_err_cross, 3) << (r.pass ? "pass" : "FAIL") << "\n";
        }
        os << (all_pass ? "all comparisons within tol " : "verification failed at tol ")
           << format_number(cfg.tol, 6) << "\n";
    }
    sink.close(opt.output);

    if (failure) err << "error: " << *failure << "\n" << diagnostics;
    return all_pass ? kExitOk : kExitVerification;
}

int cmd_selfcheck(std::ostream& out) {
    const SelfCheckResult result = run_selfcheck();
    for (const auto& item : result.items)
        out << (item.pass ? "PASS " : "FAIL ") << item.name << ": " << item.detail << "\n";
    out << "anticommutator cases checked: " << result.anticommutator_cases << "\n";
    out << "trace route vs closed form max relative deviation: "
        << format_number(result.trace_route_max_deviation, 3) << "\n";
    if (result.all_pass()) {
        out << "all identities hold\n";
        return kExitOk;
    }
    out << "failed identities:";
    for (const auto& item : result.items)
        if (!item.pass) out << " [" << item.name << "]";
    out << "\n";
    return kExitIdentity;
}

} // namespace

Format parse_format(const std::string& name) {
    if (name == "human") return Format::human;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw std::invalid_argument("unknown format '" + name + "' (expected human, json or csv)");
}

Scale parse_scale(const std::string& name) {
    if (name == "linear") return Scale::linear;
    if (name == "log") return Scale::log;
    throw std::invalid_argument("unknown scale '" + name + "' (expected linear or log)");
}

void SweepSpec::validate() const {
    if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
    if (!(accel_min >= 0.0)) throw std::invalid_argument("accel_min must be non-negative");
    if (!(accel_max > accel_min)) throw std::invalid_argument("accel_max must exceed accel_min");
    if (points < 2) throw std::invalid_argument("a sweep needs at least two points");
    if (scale == Scale::log && !(accel_min > 0.0))
        throw std::invalid_argument("log sweeps need accel_min > 0");
}

RateRow evaluate_row(const atom::TwoLevelAtom& atom, double accel, double coupling) {
    RateRow row;
    row.accel = accel;
    row.rates = rates::rate_total(atom, accel, coupling);
    row.poly_factor = rates::polynomial_factor(atom.omega0, accel);
    row.planck_n = rates::thermal_occupation(atom.omega0, accel);
    if (accel > 0.0) {
        // ratio underflows for 2 pi omega0 / a > ~745: not resolvable, report nan
        try {
            row.t_eff = rates::effective_temperature(atom.omega0, accel);
        } catch (const std::domain_error&) {
            row.t_eff = std::numeric_limits<double>::quiet_NaN();
        }
    }
    return row;
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    spec.validate();
    std::vector<double> grid(static_cast<std::size_t>(spec.points));
    const double last = spec.points - 1;
    for (int i = 0; i < spec.points; ++i) {
        const double t = i / last;
        if (spec.scale == Scale::linear) {
            grid[i] = spec.accel_min + t * (spec.accel_max - spec.accel_min);
        } else {
            grid[i] = spec.accel_min * std::pow(spec.accel_max / spec.accel_min, t);
        }
    }
    grid.front() = spec.accel_min;
    grid.back() = spec.accel_max;
    return grid;
}

std::vector<RateRow> run_sweep(const SweepSpec& spec) {
    const atom::TwoLevelAtom atom{spec.omega0, spec.state};
    std::vector<RateRow> rows;
    for (double a : sweep_grid(spec)) rows.push_back(evaluate_row(atom, a, spec.coupling));
    return rows;
}

std::string format_number(double value, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << value;
    return os.str();
}

void write_csv_row(std::ostream& out, const RateRow& row) {
    out << format_number(row.accel) << ',' << format_number(row.rates.vf) << ','
        << format_number(row.rates.cross) << ',' << format_number(row.rates.total) << ','
        << format_number(row.poly_factor) << ',' << format_number(row.planck_n) << ','
        << format_number(row.t_eff) << "\n";
}

void write_sweep_csv(std::ostream& out, const std::vector<RateRow>& rows) {
    out << kCsvHeader << "\n";
    for (const auto& row : rows) write_csv_row(out, row);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Transition rates of a uniformly accelerated two-level atom coupled to the "
                 "massless Dirac vacuum"};
    app.set_config("--config", "", "Read key=value defaults from a file (flags override)");
    app.require_subcommand(1);

    Options opt;
    app.add_option("--omega0", opt.omega0, "Transition frequency omega0 (natural units)");
    opt.accel_opt = app.add_option("--accel", opt.accel, "Proper acceleration a (natural units)");
    opt.si_accel_opt = app.add_option("--si-accel", opt.si_accel,
                                      "Proper acceleration in m/s^2, converted to a/c in s^-1");
    opt.accel_opt->excludes(opt.si_accel_opt);
    app.add_option("--coupling", opt.coupling, "Coupling constant mu");
    opt.state_opt = app.add_option("--state", opt.state, "Initial level: ground or excited")
                        ->check(CLI::IsMember({"ground", "excited"}));
    opt.format_opt = app.add_option("--format", opt.format, "Output format: human, json or csv")
                         ->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--output", opt.output, "Write output to this file instead of stdout");
    app.add_option("--tol", opt.tol, "Verification tolerance (relative)");
    opt.epsilons_opt = app.add_option("--epsilons", opt.epsilons,
                                      "Regulator schedule, strictly decreasing")
                           ->delimiter(',');
    app.add_option("--points", opt.points, "Number of sweep points");
    app.add_option("--scale", opt.scale, "Sweep spacing: linear or log")
        ->check(CLI::IsMember({"linear", "log"}));
    app.add_option("--accel-min", opt.accel_min, "Smallest sweep acceleration");
    app.add_option("--accel-max", opt.accel_max, "Largest sweep acceleration");

    auto* rate = app.add_subcommand("rate", "Rates at a single acceleration")->fallthrough();
    auto* sweep = app.add_subcommand("sweep", "Rates over an acceleration grid (CSV)")->fallthrough();
    auto* verify = app.add_subcommand("verify", "Compare closed forms with numerical quadrature")
                       ->fallthrough();
    auto* selfcheck = app.add_subcommand("selfcheck", "Gamma-algebra and correlator identities")
                          ->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rate->parsed()) return cmd_rate(opt, out);
        if (sweep->parsed()) return cmd_sweep(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out, err);
        if (selfcheck->parsed()) return cmd_selfcheck(out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}

} // namespace unruh::cli
