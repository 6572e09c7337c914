#include "svg.hpp"

#include <cstdio>

namespace ifsx {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

std::string render_svg(const CompactSet& a) {
    if (a.dim() > 2) fail(ErrorCode::unsupported, "render_svg: only d = 1 or 2 supported");
    const double w = 640.0, h = 160.0, pad = 20.0;
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"";
    out += (a.dim() == 1) ? "160" : "640";
    out += "\" viewBox=\"0 0 640 ";
    out += (a.dim() == 1) ? "160" : "640";
    out += "\">\n";
    if (a.dim() == 1) {
        out += "<line x1=\"" + fmt(pad) + "\" y1=\"" + fmt(h / 2) + "\" x2=\"" + fmt(w - pad) +
               "\" y2=\"" + fmt(h / 2) + "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
        for (const auto& p : a.points()) {
            double x = pad + (w - 2 * pad) * p.coords[0];
            out += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(h / 2 - 12) + "\" x2=\"" + fmt(x) +
                   "\" y2=\"" + fmt(h / 2 + 12) + "\" stroke=\"#000\" stroke-width=\"0.5\"/>\n";
        }
    } else {
        const double side = 640.0;
        for (const auto& p : a.points()) {
            double x = pad + (side - 2 * pad) * p.coords[0];
            double y = side - pad - (side - 2 * pad) * p.coords[1];
            out += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) +
                   "\" r=\"1.5\" fill=\"#000\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace ifsx
