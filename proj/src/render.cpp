#include "sph/render.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace sph {

namespace {

constexpr double kWidth = 480.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 56.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void header(std::ostream& out) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

void render_diagram_svg(std::ostream& out, const PersistenceDiagram& diagram) {
    double top = diagram.max_filtration;
    for (const auto& f : diagram.features) top = std::max({top, f.birth, f.essential() ? f.birth : f.death});
    if (top <= 0.0) top = 1.0;
    // Finite range occupies [0, top]; essential features sit on a line above it.
    const double inf_level = top * 1.1;
    const double range = top * 1.15;
    const double plot = kWidth - 2 * kMargin;
    auto sx = [&](double v) { return kMargin + v / range * plot; };
    auto sy = [&](double v) { return kHeight - kMargin - v / range * plot; };

    header(out);
    out << "<g stroke=\"black\" stroke-width=\"1\">\n"
        << "<line class=\"axis\" x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(sx(range))
        << "\" y2=\"" << num(sy(0)) << "\"/>\n"
        << "<line class=\"axis\" x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(sx(0))
        << "\" y2=\"" << num(sy(range)) << "\"/>\n"
        << "<line class=\"diagonal\" x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(sx(range))
        << "\" y2=\"" << num(sy(range)) << "\" stroke=\"gray\"/>\n"
        << "<line class=\"infinity\" x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(inf_level)) << "\" x2=\""
        << num(sx(range)) << "\" y2=\"" << num(sy(inf_level)) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n"
        << "</g>\n";
    out << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 16) << "\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"13\">birth</text>\n"
        << "<text x=\"16\" y=\"" << num(kHeight / 2) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"13\" transform=\"rotate(-90 16 " << num(kHeight / 2) << ")\">death</text>\n"
        << "<text x=\"" << num(sx(0) - 6) << "\" y=\"" << num(sy(inf_level) + 4) << "\" text-anchor=\"end\" "
        << "font-family=\"sans-serif\" font-size=\"12\">&#8734;</text>\n"
        << "<text x=\"" << num(sx(top)) << "\" y=\"" << num(sy(0) + 16) << "\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"11\">" << num(top) << "</text>\n";

    for (const auto& f : diagram.features) {
        const double x = sx(f.birth);
        const double y = sy(f.essential() ? inf_level : f.death);
        if (f.dimension == 0) {
            out << "<circle class=\"h0\" cx=\"" << num(x) << "\" cy=\"" << num(y)
                << "\" r=\"4\" fill=\"#e377c2\" fill-opacity=\"0.8\"/>\n";
        } else {
            out << "<rect class=\"h1\" x=\"" << num(x - 3.5) << "\" y=\"" << num(y - 3.5)
                << "\" width=\"7\" height=\"7\" fill=\"#1f2d6b\" fill-opacity=\"0.8\"/>\n";
        }
    }
    out << "</svg>\n";
}

void render_dendrogram_svg(std::ostream& out, const Dendrogram& d) {
    const std::size_t n = d.n_leaves;
    // Leaf order from a depth-first walk of the merge tree so brackets never cross.
    std::vector<std::size_t> order;
    std::vector<double> x(2 * n, 0.0);
    std::vector<double> h(2 * n, 0.0);
    if (!d.merges.empty()) {
        std::vector<std::size_t> stack{n + d.merges.size() - 1};
        while (!stack.empty()) {
            std::size_t c = stack.back();
            stack.pop_back();
            if (c < n) {
                order.push_back(c);
            } else {
                const Merge& mg = d.merges[c - n];
                stack.push_back(mg.b);
                stack.push_back(mg.a);
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) order.push_back(i);
    }
    double max_h = 0.0;
    for (const auto& mg : d.merges) max_h = std::max(max_h, mg.height);
    if (max_h <= 0.0) max_h = 1.0;

    const double plot_w = kWidth - 2 * kMargin;
    const double plot_h = kHeight - 2 * kMargin - 40.0;
    const double base = kHeight - kMargin - 40.0;
    for (std::size_t i = 0; i < order.size(); ++i)
        x[order[i]] = kMargin + (static_cast<double>(i) + 0.5) / static_cast<double>(order.size()) * plot_w;
    auto sy = [&](double v) { return base - v / max_h * plot_h; };

    header(out);
    out << "<line class=\"axis\" x1=\"" << num(kMargin - 10) << "\" y1=\"" << num(sy(0)) << "\" x2=\""
        << num(kMargin - 10) << "\" y2=\"" << num(sy(max_h)) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << num(kMargin - 14) << "\" y=\"" << num(sy(max_h) + 4) << "\" text-anchor=\"end\" "
        << "font-family=\"sans-serif\" font-size=\"11\">" << num(max_h) << "</text>\n";
    out << "<g stroke=\"#333\" stroke-width=\"1.5\" fill=\"none\">\n";
    for (std::size_t i = 0; i < d.merges.size(); ++i) {
        const Merge& mg = d.merges[i];
        const std::size_t c = n + i;
        const double y = sy(mg.height);
        out << "<path class=\"merge\" d=\"M" << num(x[mg.a]) << ' ' << num(sy(h[mg.a])) << " V" << num(y) << " H"
            << num(x[mg.b]) << " V" << num(sy(h[mg.b])) << "\"/>\n";
        x[c] = (x[mg.a] + x[mg.b]) / 2.0;
        h[c] = mg.height;
    }
    out << "</g>\n";
    for (std::size_t leaf = 0; leaf < n; ++leaf) {
        const std::string label = leaf < d.labels.size() ? d.labels[leaf] : std::to_string(leaf);
        out << "<text class=\"leaf\" x=\"" << num(x[leaf]) << "\" y=\"" << num(base + 14)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" transform=\"rotate(-45 "
            << num(x[leaf]) << ' ' << num(base + 14) << ")\">" << escape(label) << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace sph
