#include "tricycle/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace tricycle {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
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

}  // namespace

void write_svg_tracks(const std::string& path, const std::vector<SvgSeries>& series,
                      double width_px) {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : series) {
        for (const auto& p : s.pts) {
            if (first) {
                xmin = xmax = p.x;
                ymin = ymax = p.y;
                first = false;
            } else {
                xmin = std::min(xmin, p.x);
                xmax = std::max(xmax, p.x);
                ymin = std::min(ymin, p.y);
                ymax = std::max(ymax, p.y);
            }
        }
    }
    const double spanx = std::max(xmax - xmin, 1e-9);
    const double spany = std::max(ymax - ymin, 1e-9);
    const double margin = 0.05 * std::max(spanx, spany);
    xmin -= margin;
    xmax += margin;
    ymin -= margin;
    ymax += margin;
    const double w = xmax - xmin, h = ymax - ymin;
    const double scale = width_px / w;
    const double height_px = h * scale;

    // plane y points up, SVG y points down
    auto X = [&](double x) { return (x - xmin) * scale; };
    auto Y = [&](double y) { return (ymax - y) * scale; };

    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os) throw std::runtime_error("svg: cannot open " + tmp);
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width_px)
           << "\" height=\"" << fmt(height_px) << "\" viewBox=\"0 0 " << fmt(width_px) << " "
           << fmt(height_px) << "\">\n";
        os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        for (const auto& s : series) {
            os << "  <polyline fill=\"none\" stroke=\"" << s.color
               << "\" stroke-width=\"1.2\" points=\"";
            for (std::size_t i = 0; i < s.pts.size(); ++i) {
                if (i) os << ' ';
                os << fmt(X(s.pts[i].x)) << ',' << fmt(Y(s.pts[i].y));
            }
            os << "\"/>\n";
        }
        double ly = 18.0;
        for (const auto& s : series) {
            os << "  <line x1=\"10\" y1=\"" << fmt(ly - 4) << "\" x2=\"34\" y2=\""
               << fmt(ly - 4) << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
            os << "  <text x=\"40\" y=\"" << fmt(ly)
               << "\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(s.label)
               << "</text>\n";
            ly += 16.0;
        }
        os << "</svg>\n";
        if (!os.good()) throw std::runtime_error("svg: write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace tricycle
