#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mobius/contraction.hpp"
#include "mobius/types.hpp"

namespace mobius::cli {

// exit-code contract shared by all subcommands
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitBadArgs = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitParse = 4;

struct CommonOptions {
    std::string out_dir = "out";
    bool emit_csv = true;
    bool emit_svg = true;
};

enum class TrialJudgement { Agree, Disagree, Borderline, Singular };

struct TheoremTrialRow {
    int trial = 0;
    int dim = 0;
    MoebiusParams params;
    std::optional<double> direct_norm;
    std::optional<double> quad_gap;
    std::optional<double> support_lhs;
    std::optional<double> support_rhs;
    TrialJudgement judgement = TrialJudgement::Borderline;
};

/// Random-matrix trials of the three-test equivalence. Pairs whose support
/// sides sit within 1e-6 of each other, or whose norm sits within 1e-8 of 1,
/// are numerically undecidable and marked Borderline (logged, not judged).
std::vector<TheoremTrialRow> theorem1_trials(int trials, int dim_lo, int dim_hi,
                                             std::uint64_t seed,
                                             const SpectralConfig& cfg = {});

int run_verify_theorem1(int trials, int dim_lo, int dim_hi, std::uint64_t seed,
                        const CommonOptions& common, std::ostream& log);

int run_volterra_region(Complex mu, int grid_n, const Window& window, int nx, int ny,
                        double band, const CommonOptions& common, std::ostream& log);

int run_vn_region(int power, Complex mu, int grid_n, const Window& window, int nx, int ny,
                  double band, const CommonOptions& common, std::ostream& log);

struct NumrangeSource {
    std::optional<std::string> file;  // when absent: discretized Volterra operator
    int grid_n = 400;
};

int run_numrange(const NumrangeSource& source, int num_angles, const CommonOptions& common,
                 std::ostream& log);

struct GrWitnessSpec {
    int n = 2;
    double theta = 0.0;
    double r = 40.0;
};

int run_witnesses(int n_max, const std::vector<GrWitnessSpec>& gr_specs,
                  const CommonOptions& common, std::ostream& log);

int run_curves(int grid_n, int num_angles, const CommonOptions& common, std::ostream& log);

/// Maps the library's error taxonomy onto the exit-code contract.
int exit_code_for_current_exception();

}  // namespace mobius::cli
