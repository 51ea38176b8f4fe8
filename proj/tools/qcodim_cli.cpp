// qcodim: quiver codimension of barcodes, quiver representations and
// persistent homology.
//
// Exit codes: 0 ok, 2 parse/usage error, 3 invariant violation,
// 4 approximation conditions failed, 5 I/O error.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcodim/approx.hpp"
#include "qcodim/barcode.hpp"
#include "qcodim/error.hpp"
#include "qcodim/io.hpp"
#include "qcodim/ph.hpp"
#include "qcodim/quiver.hpp"
#include "qcodim/realize.hpp"
#include "qcodim/svg.hpp"

namespace {

using namespace qcodim;

enum Exit : int { kOk = 0, kParse = 2, kInvariant = 3, kCondition = 4, kIo = 5 };

std::string bar_text(const Bar& bar) {
    auto end = [](ExtReal x) {
        if (x.is_plus_inf()) return std::string("inf");
        if (x.is_minus_inf()) return std::string("-inf");
        return io::format_number(x.value());
    };
    return (bar.birth.is_finite() ? "[" : "(") + end(bar.birth) + ", " + end(bar.death) +
           (bar.death.is_finite() ? "]" : ")");
}

void print_rank_array(std::ostream& out, const RankArray& ra) {
    std::size_t width = 1;
    for (std::size_t i = 1; i <= ra.size(); ++i)
        for (std::size_t j = i; j <= ra.size(); ++j) width = std::max(width, std::to_string(ra.at(i, j)).size());
    const std::size_t cell = width + 3;
    // Row k holds r(i, i + k), indented half a cell per row.
    for (std::size_t k = 0; k < ra.size(); ++k) {
        std::string line(2 + k * cell / 2, ' ');
        for (std::size_t i = 1; i + k <= ra.size(); ++i) {
            const auto s = std::to_string(ra.at(i, i + k));
            line += std::string(cell - s.size(), ' ') + s;
        }
        out << line << "\n";
    }
}

void print_barcode(std::ostream& out, const Barcode& bc) {
    if (bc.empty()) out << "  (empty)\n";
    for (const auto& e : bc.entries()) out << "  " << bar_text(e.bar) << " x" << e.multiplicity << "\n";
}

void print_pairs(std::ostream& out, const Barcode& bc) {
    const auto pairs = interacting_pairs(bc);
    out << "interacting pairs:\n";
    if (pairs.empty()) out << "  (none)\n";
    for (const auto& p : pairs) {
        out << "  " << bar_text(bc.entries()[p.first].bar) << " / " << bar_text(bc.entries()[p.second].bar) << "  "
            << to_string(p.kind) << "  x" << p.count << "\n";
    }
}

Barcode load_barcode(const std::string& path) { return io::barcode_from_json(io::parse_json(io::read_file(path))); }

int cmd_rep(const std::string& path) {
    const auto rep = io::rep_from_json(io::parse_json(io::read_file(path)));
    const auto result = codim_breakdown(rep);
    auto& out = std::cout;
    out << "field: GF(" << rep.field().p() << ")\n";
    out << "dims:";
    for (auto d : rep.dims()) out << " " << d;
    out << "\nrank array:\n";
    print_rank_array(out, result.ranks);
    out << "barcode:\n";
    print_barcode(out, result.barcode);
    print_pairs(out, result.barcode);
    out << "codim = " << result.by_rank_formula << " (rank formula) = " << result.by_interacting_pairs
        << " (interacting pairs)\n";
    if (result.by_rank_formula != result.by_interacting_pairs) {
        std::cerr << "error: the two codimension formulas disagree\n";
        return kInvariant;
    }
    out << "agreement: yes\n";
    return kOk;
}

int cmd_barcode(const std::string& path) {
    const auto bc = load_barcode(path);
    auto& out = std::cout;
    out << "index set: ";
    if (bc.index_set().is_dense()) {
        out << "real\n";
    } else {
        out << "grid of " << bc.index_set().grid().size() << " points\n";
    }
    out << "bars: " << bc.total_bars() << "\n";
    print_barcode(out, bc);
    out << "critical points:";
    for (double z : critical_points(bc)) out << " " << io::format_number(z);
    out << "\n";
    print_pairs(out, bc);
    out << "Qcodim = " << qcodim::qcodim(bc) << "\n";
    if (!bc.index_set().is_dense()) {
        const auto ra = rank_array_from_barcode(bc);
        out << "rank array:\n";
        print_rank_array(out, ra);
        out << "codim (rank formula) = " << codim_rank_formula(ra) << "\n";
    }
    return kOk;
}

ScaleConvention parse_convention(const std::string& s) {
    return s == "diameter" ? ScaleConvention::Diameter : ScaleConvention::Radius;
}

int cmd_vr(const std::string& path, std::size_t degree, const std::string& convention_name,
           std::optional<double> max_scale) {
    const auto convention = parse_convention(convention_name);
    const PointCloud cloud(io::parse_csv_rows(io::read_file(path)));
    const auto complex = vr_filtration(cloud, degree + 1, max_scale, convention);
    const auto bc = degree == 0 ? ph0_union_find(complex) : persistence(complex, degree);
    std::cout << io::dump(io::barcode_to_json(bc));
    std::cerr << "convention: " << to_string(convention) << "\n";
    std::cerr << "Qcodim = " << qcodim::qcodim(bc) << "\n";
    return kOk;
}

int cmd_sawtooth(std::size_t c) {
    const auto complex = lower_star_path(sawtooth_values(c));
    const auto bc = ph0_union_find(complex);
    if (!(bc == persistence(complex, 0))) throw InternalError("union-find and reduction barcodes differ");
    std::cout << io::dump(io::barcode_to_json(bc));
    std::cerr << "Qcodim = " << qcodim::qcodim(bc) << "\n";
    return kOk;
}

int cmd_realize(const std::string& family, std::size_t c, const std::vector<double>& eps, bool expected) {
    if (family == "xc") {
        const auto seq = eps.empty() ? EpsilonSeq::midpoints(c) : EpsilonSeq(eps);
        if (expected) {
            std::cout << io::dump(io::barcode_to_json(expected_xc_barcode(seq)));
        } else {
            std::cout << io::rows_to_csv(xc_points(seq));
        }
        return kOk;
    }
    if (expected) {
        std::cout << io::dump(io::barcode_to_json(expected_sawtooth_barcode(c)));
    } else {
        std::vector<std::vector<double>> rows;
        for (double v : sawtooth_values(c)) rows.push_back({v});
        std::cout << io::rows_to_csv(rows);
    }
    return kOk;
}

int cmd_approx(const std::string& path, int h, std::optional<double> delta, const std::string& grid_path) {
    const auto bc = load_barcode(path);
    const FiniteGrid grid = grid_path.empty() ? grid_approximation(bc, h, delta)
                                              : io::grid_from_json(io::parse_json(io::read_file(grid_path)));
    const auto report = stability_check(bc, grid, h);
    std::cout << io::dump(io::report_to_json(report));
    if (report.conditions_hold() && report.stable()) return kOk;
    std::string failed;
    if (!report.cond_i()) failed += " (i)";
    if (!report.cond_ii()) failed += " (ii)";
    if (!report.cond_iii()) failed += " (iii)";
    if (!failed.empty()) std::cerr << "conditions failed:" << failed << "\n";
    if (!report.stable())
        std::cerr << "Qcodim changed: " << *report.qcodim_original << " -> " << *report.qcodim_restricted << "\n";
    return kCondition;
}

int cmd_plot(const std::string& path, const std::string& out_path) {
    const auto bc = load_barcode(path);
    io::write_file(out_path, render_barcode_svg(bc));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quiver codimension of persistence barcodes"};
    app.require_subcommand(1);

    std::string input;

    auto* rep = app.add_subcommand("rep", "Codimension of a quiver representation (JSON) by both formulas");
    rep->add_option("file", input, "representation JSON")->required();

    auto* barcode = app.add_subcommand("barcode", "Qcodim, critical points and interacting pairs of a barcode");
    barcode->add_option("file", input, "barcode JSON")->required();

    std::size_t degree = 1;
    std::string convention = "radius";
    std::optional<double> max_scale;
    auto* vr = app.add_subcommand("vr", "Vietoris-Rips persistent homology of a CSV point cloud");
    vr->add_option("points", input, "point cloud CSV")->required();
    vr->add_option("--degree", degree, "homological degree (0 or 1)")->check(CLI::IsMember({0, 1}));
    vr->add_option("--convention", convention, "filtration value convention")
        ->check(CLI::IsMember({"radius", "diameter"}));
    vr->add_option("--max-scale", max_scale, "omit simplices above this value")->check(CLI::PositiveNumber);

    std::size_t c = 0;
    auto* sawtooth = app.add_subcommand("sawtooth", "Degree-0 barcode of the sawtooth height filtration");
    sawtooth->add_option("--c", c, "number of interacting pairs")->required();

    std::string family;
    std::vector<double> eps;
    bool expected = false;
    auto* realize = app.add_subcommand("realize", "Emit a realization family: point cloud CSV or expected barcode");
    realize->add_option("family", family, "xc or sawtooth")->required()->check(CLI::IsMember({"xc", "sawtooth"}));
    realize->add_option("--c", c, "family parameter")->required();
    realize->add_option("--eps", eps, "eps_0..eps_{c+1} for xc (comma separated)")->delimiter(',');
    realize->add_flag("--expected", expected, "emit the expected barcode JSON instead of the input data");

    int h = 2;
    std::optional<double> delta;
    std::string grid_path;
    auto* approx = app.add_subcommand("approx", "Check an h-approximation and Qcodim stability");
    approx->set_help_flag("--help", "Print this help message and exit");
    approx->add_option("file", input, "barcode JSON over the reals")->required();
    approx->add_option("--h", h, "approximation density (>= 1)")->check(CLI::Range(1, 1000000));
    auto* delta_opt = approx->add_option("--delta", delta, "grid spacing")->check(CLI::PositiveNumber);
    auto* grid_opt = approx->add_option("--grid", grid_path, "grid JSON (array of points)");
    delta_opt->excludes(grid_opt);

    std::string out_path;
    auto* plot = app.add_subcommand("plot", "Render a barcode as SVG");
    plot->add_option("file", input, "barcode JSON")->required();
    plot->add_option("-o,--output", out_path, "SVG output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*rep) return cmd_rep(input);
        if (*barcode) return cmd_barcode(input);
        if (*vr) return cmd_vr(input, degree, convention, max_scale);
        if (*sawtooth) return cmd_sawtooth(c);
        if (*realize) {
            if (family == "sawtooth" && !eps.empty()) throw ParseError("--eps applies only to the xc family");
            return cmd_realize(family, c, eps, expected);
        }
        if (*approx) return cmd_approx(input, h, delta, grid_path);
        if (*plot) return cmd_plot(input, out_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const InvariantError& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kInvariant;
    } catch (const InternalError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kInvariant;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIo;
    }
    return kOk;
}
