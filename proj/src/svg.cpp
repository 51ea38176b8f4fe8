#include "qcodim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcodim/io.hpp"

namespace qcodim {

namespace {

constexpr double kWidth = 640.0;
constexpr double kMarginLeft = 40.0;
constexpr double kMarginRight = 40.0;
constexpr double kTop = 20.0;
constexpr double kRowHeight = 14.0;
constexpr double kAxisGap = 16.0;
constexpr std::size_t kMaxTicks = 12;

// Pixel coordinates rounded to 1/100 px so output is stable and compact.
std::string px(double x) { return io::format_number(std::round(x * 100.0) / 100.0); }

}  // namespace

std::string render_barcode_svg(const Barcode& bc) {
    const auto crit = critical_points(bc);
    double lo = crit.empty() ? 0.0 : crit.front();
    double hi = crit.empty() ? 1.0 : crit.back();
    if (hi == lo) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double plot_left = kMarginLeft + 10.0;
    const double plot_right = kWidth - kMarginRight - 10.0;
    auto to_x = [&](double v) { return plot_left + (v - lo) / (hi - lo) * (plot_right - plot_left); };

    const auto rows = static_cast<std::size_t>(bc.total_bars());
    const double axis_y = kTop + static_cast<double>(rows) * kRowHeight + kAxisGap;
    const double height = axis_y + 36.0;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px(kWidth) << "\" height=\""
        << px(height) << "\" viewBox=\"0 0 " << px(kWidth) << " " << px(height) << "\">\n"
        << "  <defs>\n"
        << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
           "markerHeight=\"6\" orient=\"auto-start-reverse\">\n"
        << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"black\"/>\n"
        << "    </marker>\n"
        << "  </defs>\n"
        << "  <rect x=\"0\" y=\"0\" width=\"" << px(kWidth) << "\" height=\"" << px(height)
        << "\" fill=\"white\"/>\n";

    std::size_t row = 0;
    for (const auto& e : bc.entries()) {
        const double x1 = e.bar.birth.is_finite() ? to_x(e.bar.birth.value()) : kMarginLeft;
        const double x2 = e.bar.death.is_finite() ? to_x(e.bar.death.value()) : kWidth - kMarginRight;
        for (std::int64_t k = 0; k < e.multiplicity; ++k, ++row) {
            const double y = kTop + (static_cast<double>(row) + 0.5) * kRowHeight;
            out << "  <line class=\"bar\" x1=\"" << px(x1) << "\" y1=\"" << px(y) << "\" x2=\"" << px(x2)
                << "\" y2=\"" << px(y) << "\" stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"round\"";
            if (e.bar.birth.is_minus_inf()) out << " marker-start=\"url(#arrow)\"";
            if (e.bar.death.is_plus_inf()) out << " marker-end=\"url(#arrow)\"";
            out << "/>\n";
        }
    }

    out << "  <line class=\"axis\" x1=\"" << px(kMarginLeft) << "\" y1=\"" << px(axis_y) << "\" x2=\""
        << px(kWidth - kMarginRight) << "\" y2=\"" << px(axis_y) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // Ticks at the critical points, thinned evenly when there are many.
    std::vector<double> ticks = crit.empty() ? std::vector<double>{0.0, 1.0} : crit;
    if (ticks.size() > kMaxTicks) {
        std::vector<double> thinned;
        for (std::size_t k = 0; k < kMaxTicks; ++k) thinned.push_back(ticks[k * (ticks.size() - 1) / (kMaxTicks - 1)]);
        ticks = std::move(thinned);
    }
    for (double t : ticks) {
        const double x = to_x(t);
        out << "  <line class=\"tick\" x1=\"" << px(x) << "\" y1=\"" << px(axis_y) << "\" x2=\"" << px(x)
            << "\" y2=\"" << px(axis_y + 5.0) << "\" stroke=\"black\" stroke-width=\"1\"/>\n"
            << "  <text x=\"" << px(x) << "\" y=\"" << px(axis_y + 18.0)
            << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">" << io::format_number(t)
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace qcodim
