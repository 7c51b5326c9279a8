#include "mobius/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "mobius/curves.hpp"
#include "mobius/detail/rng.hpp"
#include "mobius/geometry.hpp"
#include "mobius/matrix_io.hpp"
#include "mobius/operators.hpp"
#include "mobius/witnesses.hpp"

namespace mobius::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : "nan"; }

std::ofstream open_output(const CommonOptions& common, const std::string& name) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(common.out_dir, ec);
    if (ec)
        throw std::ios_base::failure("cannot create output directory " + common.out_dir +
                                     ": " + ec.message());
    const fs::path path = fs::path(common.out_dir) / name;
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open output file " + path.string());
    return out;
}

const char* class_name(Classification c) {
    switch (c) {
        case Classification::Contraction: return "contraction";
        case Classification::Boundary: return "boundary";
        case Classification::NonContraction: return "noncontraction";
    }
    return "?";
}

// ---- svg helpers ------------------------------------------------------------

struct PixelMap {
    double x0, x1, y0, y1;  // world window
    double width, height, margin;

    double px(double x) const { return margin + (x - x0) / (x1 - x0) * width; }
    double py(double y) const { return margin + (y1 - y) / (y1 - y0) * height; }
};

std::string svg_header(double total_w, double total_h, const std::string& title) {
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w << "\" height=\""
      << total_h << "\" viewBox=\"0 0 " << total_w << " " << total_h << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"12\" y=\"18\" font-family=\"monospace\" font-size=\"13\">" << title
      << "</text>\n";
    return s.str();
}

std::string norm_color(const RegionCell& cell) {
    if (cell.status == CellStatus::SingularPencil) return "#606060";
    const double dev = cell.norm - 1.0;
    const double t = std::clamp(std::abs(dev) / 0.5, 0.0, 1.0);
    const int fade = static_cast<int>(255 - 190 * t);
    char buf[10];
    if (dev >= 0.0)
        std::snprintf(buf, sizeof buf, "#ff%02x%02x", fade, fade);  // white -> red
    else
        std::snprintf(buf, sizeof buf, "#%02x%02xff", fade, fade);  // white -> blue
    return buf;
}

void write_region_svg(std::ostream& out, const RegionScan& scan, const std::string& title) {
    const double margin = 40.0, width = 640.0, height = 640.0;
    const PixelMap map{scan.window.x0, scan.window.x1, scan.window.y0, scan.window.y1,
                       width, height, margin};
    out << svg_header(width + 2 * margin, height + 2 * margin, title);

    const double cell_w = width / (scan.nx - 1);
    const double cell_h = height / (scan.ny - 1);
    for (const auto& cell : scan.cells) {
        const double cx = map.px(cell.lambda.real());
        const double cy = map.py(cell.lambda.imag());
        out << "<rect x=\"" << fmt(cx - 0.5 * cell_w) << "\" y=\"" << fmt(cy - 0.5 * cell_h)
            << "\" width=\"" << fmt(cell_w) << "\" height=\"" << fmt(cell_h) << "\" fill=\""
            << norm_color(cell) << "\"/>\n";
    }

    // predicted unit-norm locus: the segment from -conj(mu) to mu
    const Complex a = -std::conj(scan.mu);
    const Complex b = scan.mu;
    out << "<line x1=\"" << fmt(map.px(a.real())) << "\" y1=\"" << fmt(map.py(a.imag()))
        << "\" x2=\"" << fmt(map.px(b.real())) << "\" y2=\"" << fmt(map.py(b.imag()))
        << "\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>\n";
    out << "<circle cx=\"" << fmt(map.px(a.real())) << "\" cy=\"" << fmt(map.py(a.imag()))
        << "\" r=\"4\" fill=\"black\"/>\n";
    out << "<circle cx=\"" << fmt(map.px(b.real())) << "\" cy=\"" << fmt(map.py(b.imag()))
        << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
    out << "<rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin) << "\" width=\""
        << fmt(width) << "\" height=\"" << fmt(height)
        << "\" fill=\"none\" stroke=\"#999999\"/>\n";
    out << "</svg>\n";
}

void write_points_svg(std::ostream& out, const std::vector<Complex>& computed,
                      const std::vector<Complex>& reference, const std::string& title) {
    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
    auto stretch = [&](const std::vector<Complex>& pts) {
        for (const Complex& p : pts) {
            x0 = std::min(x0, p.real());
            x1 = std::max(x1, p.real());
            y0 = std::min(y0, p.imag());
            y1 = std::max(y1, p.imag());
        }
    };
    stretch(computed);
    stretch(reference);
    const double pad = 0.05 * std::max({x1 - x0, y1 - y0, 1e-6});
    x0 -= pad; x1 += pad; y0 -= pad; y1 += pad;

    const double margin = 40.0, width = 640.0, height = 640.0;
    const PixelMap map{x0, x1, y0, y1, width, height, margin};
    out << svg_header(width + 2 * margin, height + 2 * margin, title);

    auto polyline = [&](const std::vector<Complex>& pts, const char* style, bool close) {
        if (pts.empty()) return;
        out << "<path d=\"";
        for (std::size_t i = 0; i < pts.size(); ++i)
            out << (i ? " L " : "M ") << fmt(map.px(pts[i].real())) << ' '
                << fmt(map.py(pts[i].imag()));
        if (close) out << " Z";
        out << "\" fill=\"none\" " << style << "/>\n";
    };
    polyline(reference, "stroke=\"#cc3333\" stroke-width=\"1.2\" stroke-dasharray=\"5 3\"",
             true);
    polyline(computed, "stroke=\"#2255cc\" stroke-width=\"1.5\"", true);
    // axes through the origin when visible
    if (x0 < 0.0 && x1 > 0.0)
        out << "<line x1=\"" << fmt(map.px(0)) << "\" y1=\"" << fmt(margin) << "\" x2=\""
            << fmt(map.px(0)) << "\" y2=\"" << fmt(margin + height)
            << "\" stroke=\"#bbbbbb\"/>\n";
    if (y0 < 0.0 && y1 > 0.0)
        out << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(map.py(0)) << "\" x2=\""
            << fmt(margin + width) << "\" y2=\"" << fmt(map.py(0))
            << "\" stroke=\"#bbbbbb\"/>\n";
    out << "</svg>\n";
}

void write_region_outputs(const RegionScan& scan, const CommonOptions& common,
                          const std::string& stem, const std::string& title) {
    if (common.emit_csv) {
        std::ofstream csv = open_output(common, stem + ".csv");
        csv << "lambda_re,lambda_im,norm,class\n";
        for (const auto& cell : scan.cells) {
            csv << fmt(cell.lambda.real()) << ',' << fmt(cell.lambda.imag()) << ',';
            if (cell.status == CellStatus::SingularPencil)
                csv << "nan,singular\n";
            else
                csv << fmt(cell.norm) << ',' << class_name(cell.classification) << '\n';
        }
    }
    if (common.emit_svg) {
        std::ofstream svg = open_output(common, stem + ".svg");
        write_region_svg(svg, scan, title);
    }
}

}  // namespace

std::vector<TheoremTrialRow> theorem1_trials(int trials, int dim_lo, int dim_hi,
                                             std::uint64_t seed, const SpectralConfig& cfg) {
    require(trials >= 1, "theorem1_trials: need at least one trial");
    require(dim_lo >= 1 && dim_hi >= dim_lo, "theorem1_trials: bad dimension range");

    detail::Rng param_rng(seed ^ 0x5b1ce5c0ffee1234ull);
    std::vector<TheoremTrialRow> rows;
    rows.reserve(static_cast<std::size_t>(trials));

    for (int trial = 0; trial < trials; ++trial) {
        TheoremTrialRow row;
        row.trial = trial;
        row.dim = dim_lo + trial % (dim_hi - dim_lo + 1);
        row.params = {param_rng.next_complex_gaussian(), param_rng.next_complex_gaussian()};

        const ComplexMatrix t =
            random_invertible_matrix(row.dim, seed + 1000003ull * (trial + 1), 1e6);
        try {
            row.direct_norm = direct_norm_test(t, row.params, cfg);
        } catch (const SingularPencilError&) {
            row.judgement = TrialJudgement::Singular;
            rows.push_back(row);
            continue;
        }
        row.quad_gap = quadratic_gap_test(t, row.params, cfg);
        const SupportTestResult support = support_inequality_test(t, row.params, cfg);
        row.support_lhs = support.lhs;
        row.support_rhs = support.rhs;

        const bool borderline = std::abs(support.lhs - support.rhs) <= 1e-6 ||
                                std::abs(*row.direct_norm - 1.0) <= 1e-8;
        if (borderline) {
            row.judgement = TrialJudgement::Borderline;
        } else {
            const bool direct_c = *row.direct_norm <= 1.0;
            const bool quad_c = *row.quad_gap <= 0.0;
            const bool support_c = support.holds;
            row.judgement = (direct_c == quad_c && quad_c == support_c)
                                ? TrialJudgement::Agree
                                : TrialJudgement::Disagree;
        }
        rows.push_back(row);
    }
    return rows;
}

int run_verify_theorem1(int trials, int dim_lo, int dim_hi, std::uint64_t seed,
                        const CommonOptions& common, std::ostream& log) {
    const std::vector<TheoremTrialRow> rows = theorem1_trials(trials, dim_lo, dim_hi, seed);

    int disagreements = 0, judged = 0, borderline = 0, singular = 0;
    for (const auto& row : rows) {
        switch (row.judgement) {
            case TrialJudgement::Agree: ++judged; break;
            case TrialJudgement::Disagree: ++judged; ++disagreements; break;
            case TrialJudgement::Borderline: ++borderline; break;
            case TrialJudgement::Singular: ++singular; break;
        }
    }

    if (common.emit_csv) {
        std::ofstream csv = open_output(common, "verify-theorem1.csv");
        csv << "trial,dim,lambda_re,lambda_im,mu_re,mu_im,direct_norm,quad_gap,"
               "support_lhs,support_rhs,agree\n";
        for (const auto& row : rows) {
            csv << row.trial << ',' << row.dim << ',' << fmt(row.params.lambda.real()) << ','
                << fmt(row.params.lambda.imag()) << ',' << fmt(row.params.mu.real()) << ','
                << fmt(row.params.mu.imag()) << ',' << fmt_opt(row.direct_norm) << ','
                << fmt_opt(row.quad_gap) << ',' << fmt_opt(row.support_lhs) << ','
                << fmt_opt(row.support_rhs) << ',';
            switch (row.judgement) {
                case TrialJudgement::Agree: csv << "1\n"; break;
                case TrialJudgement::Disagree: csv << "0\n"; break;
                default: csv << "na\n"; break;
            }
        }
    }

    log << "verify-theorem1: trials=" << rows.size() << " judged=" << judged
        << " disagreements=" << disagreements << " borderline=" << borderline
        << " singular=" << singular << "\n";
    return disagreements == 0 ? kExitOk : kExitViolation;
}

int run_volterra_region(Complex mu, int grid_n, const Window& window, int nx, int ny,
                        double band, const CommonOptions& common, std::ostream& log) {
    require(grid_n >= 2, "volterra-region: grid size must be >= 2");
    const DiscretizedOperator v = build_volterra(grid_n);
    const RegionScan scan = region_scan(v.matrix, mu, window, nx, ny, {}, band);

    int counts[3] = {0, 0, 0};
    int singular = 0;
    for (const auto& cell : scan.cells) {
        if (cell.status == CellStatus::SingularPencil) ++singular;
        else ++counts[static_cast<int>(cell.classification)];
    }
    write_region_outputs(scan, common, "volterra-region",
                         "|(I + lambda V)(I + mu V)^-1|, N=" + std::to_string(grid_n) +
                             ", mu=" + fmt(mu.real()) + "+" + fmt(mu.imag()) + "i");
    log << "volterra-region: contraction=" << counts[0] << " boundary=" << counts[1]
        << " noncontraction=" << counts[2] << " singular=" << singular
        << " band=" << fmt(band) << "\n";
    return kExitOk;
}

int run_vn_region(int power, Complex mu, int grid_n, const Window& window, int nx, int ny,
                  double band, const CommonOptions& common, std::ostream& log) {
    require(power >= 2, "vn-region: power must be >= 2");
    require(grid_n >= 2, "vn-region: grid size must be >= 2");
    const DiscretizedOperator vn = operator_power(build_volterra(grid_n), power);
    const RegionScan scan = region_scan(vn.matrix, mu, window, nx, ny, {}, band);

    double min_norm = std::numeric_limits<double>::infinity();
    int strict_contractions = 0;
    for (const auto& cell : scan.cells) {
        if (cell.status != CellStatus::Ok || cell.lambda == mu) continue;
        min_norm = std::min(min_norm, cell.norm);
        if (cell.classification == Classification::Contraction) ++strict_contractions;
    }
    write_region_outputs(scan, common, "vn-region",
                         "|(I + lambda V^" + std::to_string(power) +
                             ")(I + mu V^" + std::to_string(power) + ")^-1|, N=" +
                             std::to_string(grid_n));
    log << "vn-region: power=" << power << " min_offdiagonal_norm=" << fmt(min_norm)
        << " strict_contraction_cells=" << strict_contractions << " band=" << fmt(band)
        << "\n";
    // a strictly contractive cell off the diagonal would contradict the
    // never-contraction property for powers >= 2
    return strict_contractions == 0 ? kExitOk : kExitViolation;
}

int run_numrange(const NumrangeSource& source, int num_angles, const CommonOptions& common,
                 std::ostream& log) {
    require(num_angles >= 8, "numrange: need at least 8 angles");

    ComplexMatrix a;
    bool is_volterra = false;
    if (source.file) {
        a = read_matrix_file(*source.file);
    } else {
        require(source.grid_n >= 2, "numrange: grid size must be >= 2");
        a = build_volterra(source.grid_n).matrix;
        is_volterra = true;
    }

    const NumericalRangeBoundary boundary = numerical_range_boundary(a, num_angles);
    if (common.emit_csv) {
        std::ofstream csv = open_output(common, "numrange.csv");
        csv << "theta,support,re,im\n";
        for (const auto& s : boundary.samples)
            csv << fmt(s.theta) << ',' << fmt(s.support) << ',' << fmt(s.point.real()) << ','
                << fmt(s.point.imag()) << '\n';
    }

    std::vector<Complex> reference;
    if (is_volterra) {
        const ReferenceBoundary ref = make_reference_boundary();
        reference = ref.samples;
        const WvComparison cmp = compare_wv(build_volterra(source.grid_n), num_angles);
        log << "numrange: volterra N=" << source.grid_n
            << " max_overlay_deviation=" << fmt(cmp.max_deviation) << "\n";
    } else {
        log << "numrange: dim=" << a.rows() << " samples=" << boundary.samples.size() << "\n";
    }
    if (common.emit_svg) {
        std::vector<Complex> pts;
        pts.reserve(boundary.samples.size());
        for (const auto& s : boundary.samples) pts.push_back(s.point);
        std::ofstream svg = open_output(common, "numrange.svg");
        write_points_svg(svg, pts, reference, "numerical range boundary");
    }
    return kExitOk;
}

int run_witnesses(int n_max, const std::vector<GrWitnessSpec>& gr_specs,
                  const CommonOptions& common, std::ostream& log) {
    require(n_max >= 0, "witnesses: n_max must be >= 0");

    std::ofstream csv;
    if (common.emit_csv) {
        csv = open_output(common, "witnesses.csv");
        csv << "id,closed_re,closed_im,quad_re,quad_im,abs_diff,target_arg,measured_arg\n";
    }

    double max_diff = 0.0;
    auto emit_closed = [&](const WitnessQuotient& w) {
        const Complex quad = w.cross_check.value_or(w.quotient);
        const double diff = std::abs(w.quotient - quad);
        max_diff = std::max(max_diff, diff);
        if (common.emit_csv)
            csv << w.description << ',' << fmt(w.quotient.real()) << ','
                << fmt(w.quotient.imag()) << ',' << fmt(quad.real()) << ',' << fmt(quad.imag())
                << ',' << fmt(diff) << ",,\n";
    };
    for (int n = 1; n <= n_max; ++n) {
        emit_closed(witness_g_quotient(n, +1));
        emit_closed(witness_g_quotient(n, -1));
        emit_closed(witness_h_quotient(n));
    }

    for (const auto& spec : gr_specs) {
        double target = spec.n * spec.theta;
        target = std::remainder(target, kTwoPi);  // principal value in (-pi, pi]
        std::string id = "gr(n=" + std::to_string(spec.n) + ";theta=" + fmt(spec.theta) +
                         ";r=" + fmt(spec.r) + ")";
        std::string quad_re = "nan", quad_im = "nan", measured = "nan";
        try {
            const WitnessQuotient w = witness_gr_quotient(spec.n, spec.theta, spec.r);
            id = w.description;
            quad_re = fmt(w.quotient.real());
            quad_im = fmt(w.quotient.imag());
            measured = fmt(std::arg(w.quotient));
        } catch (const std::range_error&) {
            // row recorded with nan fields; the run itself continues
        }
        if (common.emit_csv)
            csv << id << ",,," << quad_re << ',' << quad_im << ",," << fmt(target) << ','
                << measured << '\n';
    }
    log << "witnesses: closed_vs_quadrature_max_diff=" << fmt(max_diff)
        << " gr_rows=" << gr_specs.size() << "\n";
    return kExitOk;
}

int run_curves(int grid_n, int num_angles, const CommonOptions& common, std::ostream& log) {
    require(grid_n >= 2, "curves: grid size must be >= 2");
    require(num_angles >= 8, "curves: need at least 8 angles");

    const DiscretizedOperator v = build_volterra(grid_n);
    const WvComparison cmp = compare_wv(v, num_angles);
    if (common.emit_csv) {
        std::ofstream csv = open_output(common, "curves.csv");
        csv << "theta,computed_support,reference_support,deviation\n";
        for (const auto& d : cmp.per_angle)
            csv << fmt(d.theta) << ',' << fmt(d.computed) << ',' << fmt(d.reference) << ','
                << fmt(std::abs(d.computed - d.reference)) << '\n';

        const ReferenceBoundary ref = make_reference_boundary();
        std::ofstream ref_csv = open_output(common, "reference-boundary.csv");
        ref_csv << "re,im\n";
        for (const Complex& w : ref.samples)
            ref_csv << fmt(w.real()) << ',' << fmt(w.imag()) << '\n';
    }
    if (common.emit_svg) {
        const NumericalRangeBoundary boundary =
            numerical_range_boundary(v.matrix, num_angles);
        std::vector<Complex> pts;
        pts.reserve(boundary.samples.size());
        for (const auto& s : boundary.samples) pts.push_back(s.point);
        std::ofstream svg = open_output(common, "curves.svg");
        write_points_svg(svg, pts, make_reference_boundary().samples,
                         "computed range vs reference boundary, N=" + std::to_string(grid_n));
    }

    const double rightmost = support_function(v.matrix, Complex(1.0, 0.0));
    const double edge = vertical_edge_extent(v);
    log << "curves: N=" << grid_n << " max_deviation=" << fmt(cmp.max_deviation)
        << " rightmost=" << fmt(rightmost) << " vertical_edge_top=" << fmt(edge)
        << " (reference 0.5, " << fmt(1.0 / kTwoPi) << ")\n";
    return kExitOk;
}

int exit_code_for_current_exception() {
    try {
        throw;
    } catch (const MatrixParseError&) {
        return kExitParse;
    } catch (const std::ios_base::failure&) {
        return kExitIo;
    } catch (const std::filesystem::filesystem_error&) {
        return kExitIo;
    } catch (const std::invalid_argument&) {
        return kExitBadArgs;
    } catch (const std::range_error&) {
        return kExitBadArgs;
    } catch (const std::exception&) {
        return kExitViolation;
    }
}

}  // namespace mobius::cli
