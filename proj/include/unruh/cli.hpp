// cli.hpp - command-line front end: rate, sweep, verify, selfcheck.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "unruh/atom.hpp"
#include "unruh/oracle.hpp"
#include "unruh/rates.hpp"

namespace unruh::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitIo = 1,
    kExitUsage = 2,
    kExitVerification = 3,
    kExitIdentity = 4,
};

enum class Format { human, json, csv };
enum class Scale { linear, log };

Format parse_format(const std::string& name);
Scale parse_scale(const std::string& name);

struct SweepSpec {
    double omega0{1.0};
    double coupling{1.0};
    double accel_min{0.0};
    double accel_max{10.0};
    int points{11};
    Scale scale{Scale::linear};
    atom::Level state{atom::Level::ground};

    void validate() const;
};

// One row of rate output: the breakdown plus derived columns.
struct RateRow {
    double accel{0.0};
    rates::RateBreakdown rates;
    double poly_factor{0.0};
    double planck_n{0.0};
    double t_eff{0.0};
};

inline constexpr const char* kCsvHeader =
    "accel,rate_vf,rate_cross,rate_total,poly_factor,planck_n,T_eff";

RateRow evaluate_row(const atom::TwoLevelAtom& atom, double accel, double coupling);

std::vector<double> sweep_grid(const SweepSpec& spec);
std::vector<RateRow> run_sweep(const SweepSpec& spec);

void write_csv_row(std::ostream& out, const RateRow& row);
void write_sweep_csv(std::ostream& out, const std::vector<RateRow>& rows);

// Machine formats use 17 significant digits, human format 6.
std::string format_number(double value, int digits = 17);

struct SelfCheckItem {
    std::string name;
    bool pass{false};
    std::string detail;
};

struct SelfCheckResult {
    std::vector<SelfCheckItem> items;
    int anticommutator_cases{0};
    double trace_route_max_deviation{0.0};

    bool all_pass() const;
};

SelfCheckResult run_selfcheck();

// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace unruh::cli
