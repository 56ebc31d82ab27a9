#include "sbl/svg.hpp"
#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sbl {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string esc(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

const char* kPalette[6] = {"#1f77b4", "#d62728", "#2ca02c",
                           "#9467bd", "#ff7f0e", "#8c564b"};

const char* degree_color(int degree) {
    int i = ((degree % 6) + 6) % 6;
    return kPalette[i];
}

std::string header(double w, double h, const std::string& title) {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) +
                    "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " +
                    num(h) + "\">\n";
    if (!title.empty())
        s += "<text x=\"10\" y=\"18\" font-size=\"14\" font-family=\"monospace\">" +
             esc(title) + "</text>\n";
    return s;
}

} // namespace

std::string svg_barcode(const Barcode& b, const std::string& title) {
    std::vector<GradedInterval> bars = b.bars;
    std::sort(bars.begin(), bars.end(), [](const GradedInterval& x, const GradedInterval& y) {
        return std::make_tuple(x.degree, x.key()) < std::make_tuple(y.degree, y.key());
    });
    std::size_t rows = 0;
    for (const auto& bar : bars) rows += std::size_t(bar.mult);
    double lo = 0, hi = 1;
    bool first = true;
    for (const auto& bar : bars) {
        double x0 = bar.birth.to_double();
        double x1 = bar.death.is_pos_inf() ? x0 + 1 : bar.death.to_double();
        if (first) { lo = x0; hi = x1; first = false; }
        lo = std::min(lo, x0);
        hi = std::max(hi, x1);
    }
    if (hi - lo < 1e-9) hi = lo + 1;
    double span = hi - lo, margin = 0.08 * span;
    lo -= margin;
    hi += margin;
    const double width = 640, row_h = 14, top = 30;
    double height = top + row_h * double(std::max<std::size_t>(rows, 1)) + 24;
    auto sx = [&](double t) { return 40 + (width - 80) * (t - lo) / (hi - lo); };
    std::string s = header(width, height, title);
    s += "<line x1=\"" + num(sx(lo)) + "\" y1=\"" + num(height - 18) + "\" x2=\"" +
         num(sx(hi)) + "\" y2=\"" + num(height - 18) +
         "\" stroke=\"#666\" stroke-width=\"1\"/>\n";
    std::size_t row = 0;
    for (const auto& bar : bars) {
        for (std::int64_t m = 0; m < bar.mult; ++m, ++row) {
            double y = top + row_h * double(row) + row_h / 2;
            double x0 = sx(bar.birth.to_double());
            double x1 = bar.death.is_pos_inf() ? sx(hi) : sx(bar.death.to_double());
            s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y) + "\" x2=\"" + num(x1) +
                 "\" y2=\"" + num(y) + "\" stroke=\"" + degree_color(bar.degree) +
                 "\" stroke-width=\"5\"/>\n";
            if (bar.death.is_pos_inf())
                s += "<path d=\"M" + num(x1) + " " + num(y - 5) + " L" + num(x1 + 8) +
                     " " + num(y) + " L" + num(x1) + " " + num(y + 5) +
                     " Z\" fill=\"" + std::string(degree_color(bar.degree)) + "\"/>\n";
            s += "<text x=\"6\" y=\"" + num(y + 4) +
                 "\" font-size=\"10\" font-family=\"monospace\">" +
                 std::to_string(bar.degree) + "</text>\n";
        }
    }
    s += "</svg>\n";
    return s;
}

std::string svg_rank_steps(const std::vector<std::pair<double, std::int64_t>>& samples,
                           const std::string& title) {
    const double width = 640, height = 360;
    std::string s = header(width, height, title);
    if (!samples.empty()) {
        double lo = samples.front().first, hi = samples.back().first;
        if (hi - lo < 1e-9) hi = lo + 1;
        std::int64_t rmax = 1;
        for (const auto& [x, r] : samples) rmax = std::max(rmax, r);
        auto sx = [&](double t) { return 40 + (width - 80) * (t - lo) / (hi - lo); };
        auto sy = [&](std::int64_t r) {
            return height - 40 - (height - 90) * double(r) / double(rmax);
        };
        s += "<line x1=\"40\" y1=\"" + num(height - 40) + "\" x2=\"" + num(width - 40) +
             "\" y2=\"" + num(height - 40) + "\" stroke=\"#666\"/>\n";
        std::string path;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            double x = sx(samples[i].first), y = sy(samples[i].second);
            if (i == 0)
                path += "M" + num(x) + " " + num(y);
            else
                path += " H" + num(x) + " V" + num(y);
        }
        s += "<path d=\"" + path +
             "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
        for (const auto& [x, r] : samples)
            s += "<circle cx=\"" + num(sx(x)) + "\" cy=\"" + num(sy(r)) +
                 "\" r=\"2.5\" fill=\"#d62728\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

} // namespace sbl
