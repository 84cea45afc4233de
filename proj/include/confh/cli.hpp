#pragma once

#include "confh/domain.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace confh::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kNonConvergence = 2,
};

struct Fig1Row {
    double lambda = 0.0;
    double moving_sinc = 0.0;
    double moving_poly = 0.0;
    double clamped_poly = 0.0;
    double clamped_sinc = 0.0;
    double clamped_series = 0.0;
};

struct Fig2Row {
    double lambda = 0.0;
    double poly = 0.0;
    double variational = 0.0;
    double asymptote = 0.0;
};

/// lambda = 0, step, ..., lambda_max (inclusive up to rounding).
std::vector<Fig1Row> fig1_rows(double beta, double lambda_max, double step);

/// lambda = step, 2 step, ..., lambda_max; eps / lambda^2 for the alpha = 0
/// polynomial state and for the optimized exponential trial state.
std::vector<Fig2Row> fig2_rows(double beta, double lambda_max, double step, const QuadratureSpec& spec);

void write_fig1_csv(std::ostream& out, const std::vector<Fig1Row>& rows);
void write_fig2_csv(std::ostream& out, const std::vector<Fig2Row>& rows);

/// Runs one command. args excludes the program name. Data goes to out (or
/// the --output file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace confh::cli
