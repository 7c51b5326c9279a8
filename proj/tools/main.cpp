#include <cstdint>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mobius/cli.hpp"

namespace {

using mobius::Complex;
using mobius::Window;

bool split_doubles(const std::string& text, char sep, std::vector<double>* out) {
    out->clear();
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find(sep, start);
        const std::string piece =
            text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        try {
            std::size_t used = 0;
            out->push_back(std::stod(piece, &used));
            if (used != piece.size()) return false;
        } catch (const std::exception&) {
            return false;
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return true;
}

Complex parse_complex_flag(const std::string& text) {
    std::vector<double> parts;
    if (!split_doubles(text, ':', &parts) || parts.size() != 2)
        throw std::invalid_argument("--mu expects re:im, got '" + text + "'");
    return {parts[0], parts[1]};
}

Window parse_window_flag(const std::string& text) {
    std::vector<double> parts;
    if (!split_doubles(text, ':', &parts) || parts.size() != 4)
        throw std::invalid_argument("--window expects x0:x1:y0:y1, got '" + text + "'");
    return {parts[0], parts[1], parts[2], parts[3]};
}

template <typename F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return mobius::cli::exit_code_for_current_exception();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contraction tests for operator Moebius transforms "
                 "(I + lambda T)(I + mu T)^-1 and the Volterra operator"};
    app.require_subcommand(1);

    mobius::cli::CommonOptions common;
    bool want_csv = false, want_svg = false;
    app.add_option("--out", common.out_dir, "output directory (default: out)");
    app.add_flag("--csv", want_csv, "emit only CSV (default: CSV and SVG)");
    app.add_flag("--svg", want_svg, "emit only SVG (default: CSV and SVG)");

    // verify-theorem1
    int trials = 1000, dim_lo = 2, dim_hi = 8;
    std::uint64_t seed = 1;
    std::string dims_text = "2:8";
    auto* verify = app.add_subcommand(
        "verify-theorem1", "run the three equivalent contraction tests on random matrices");
    verify->add_option("--trials", trials, "number of random (T, lambda, mu) trials");
    verify->add_option("--dims", dims_text, "matrix dimension range lo:hi");
    verify->add_option("--seed", seed, "random seed");

    // shared region flags
    int grid_n = 200, nx = 41, ny = 41, power = 2, angles = 256, n_max = 5;
    double band = 1e-2;
    std::string mu_text = "1:0", window_text = "-1.5:1.5:-1.5:1.5", res_text = "41:41";
    std::string matrix_file;
    std::vector<std::string> gr_texts;

    auto add_region_flags = [&](CLI::App* cmd) {
        cmd->add_option("--n", grid_n, "discretization grid size");
        cmd->add_option("--mu", mu_text, "mu as re:im");
        cmd->add_option("--window", window_text, "lambda window x0:x1:y0:y1");
        cmd->add_option("--res", res_text, "grid resolution nx:ny");
        cmd->add_option("--tol", band, "classification band around norm 1");
        cmd->add_option("--seed", seed, "unused for scans; accepted for uniformity");
    };
    auto* volterra_region = app.add_subcommand(
        "volterra-region", "classify the lambda plane for the discretized integration operator");
    add_region_flags(volterra_region);
    auto* vn_region = app.add_subcommand(
        "vn-region", "classify the lambda plane for a power of the integration operator");
    add_region_flags(vn_region);
    vn_region->add_option("--power", power, "operator power n >= 2");

    auto* numrange = app.add_subcommand("numrange", "sample a numerical-range boundary");
    numrange->add_option("--n", grid_n, "grid size for the built-in integration operator");
    numrange->add_option("--file", matrix_file, "matrix file (first line dim, rows of re:im)");
    numrange->add_option("--angles", angles, "number of support directions");

    auto* witnesses = app.add_subcommand(
        "witnesses", "evaluate the inverse-operator witness quotients");
    witnesses->add_option("--nmax", n_max, "emit g/h witnesses for 1..nmax");
    witnesses->add_option("--gr", gr_texts, "extra witness rows n:theta:r (repeatable)");

    auto* curves = app.add_subcommand(
        "curves", "compare the computed range of the discretized operator with the "
                  "reference boundary");
    curves->add_option("--n", grid_n, "discretization grid size");
    curves->add_option("--angles", angles, "number of support directions");

    // let the shared --out/--csv/--svg flags appear after the subcommand name
    for (CLI::App* sub : {verify, volterra_region, vn_region, numrange, witnesses, curves})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return mobius::cli::kExitBadArgs;
    }

    if (want_csv || want_svg) {
        common.emit_csv = want_csv;
        common.emit_svg = want_svg;
    }

    return guarded([&]() -> int {
        if (verify->parsed()) {
            std::vector<double> dims;
            if (!split_doubles(dims_text, ':', &dims) || dims.size() != 2)
                throw std::invalid_argument("--dims expects lo:hi");
            dim_lo = static_cast<int>(dims[0]);
            dim_hi = static_cast<int>(dims[1]);
            return mobius::cli::run_verify_theorem1(trials, dim_lo, dim_hi, seed, common,
                                                    std::cout);
        }

        std::vector<double> res;
        if (!split_doubles(res_text, ':', &res) || res.size() != 2)
            throw std::invalid_argument("--res expects nx:ny");
        nx = static_cast<int>(res[0]);
        ny = static_cast<int>(res[1]);
        const Complex mu = parse_complex_flag(mu_text);
        const Window window = parse_window_flag(window_text);

        if (volterra_region->parsed())
            return mobius::cli::run_volterra_region(mu, grid_n, window, nx, ny, band, common,
                                                    std::cout);
        if (vn_region->parsed())
            return mobius::cli::run_vn_region(power, mu, grid_n, window, nx, ny, band, common,
                                              std::cout);
        if (numrange->parsed()) {
            mobius::cli::NumrangeSource source;
            source.grid_n = grid_n;
            if (!matrix_file.empty()) source.file = matrix_file;
            return mobius::cli::run_numrange(source, angles, common, std::cout);
        }
        if (witnesses->parsed()) {
            std::vector<mobius::cli::GrWitnessSpec> specs;
            for (const std::string& text : gr_texts) {
                std::vector<double> parts;
                if (!split_doubles(text, ':', &parts) || parts.size() != 3)
                    throw std::invalid_argument("--gr expects n:theta:r");
                specs.push_back({static_cast<int>(parts[0]), parts[1], parts[2]});
            }
            return mobius::cli::run_witnesses(n_max, specs, common, std::cout);
        }
        if (curves->parsed())
            return mobius::cli::run_curves(grid_n, angles, common, std::cout);
        throw std::invalid_argument("no subcommand selected");
    });
}
