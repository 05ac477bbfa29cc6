#include "hodge/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace hodge {

namespace {

constexpr int kCell = 20;

}  // namespace

DiagramSpec make_diagram(const DimTable& nodes) {
    DiagramSpec d;
    d.nodes = nonzero(nodes);
    if (d.nodes.empty()) {
        d.p_max = d.q_max = 2;
        return d;
    }
    for (const auto& [k, v] : d.nodes) {
        d.p_min = std::min(d.p_min, k.first);
        d.p_max = std::max(d.p_max, k.first);
        d.q_min = std::min(d.q_min, k.second);
        d.q_max = std::max(d.q_max, k.second);
    }
    return d;
}

DiagramSpec make_diagram(const LmhsDatum& l) {
    Bigrading b = deligne_splitting(l);
    DiagramSpec d = make_diagram(b.dims());
    for (const auto& n : b.nodes)
        if (!n.space.is_zero() && !apply(l.N, n.space).is_zero()) d.arrows.insert({n.p, n.q});
    return d;
}

std::string render_ascii(const DiagramSpec& d) {
    std::string out;
    for (int q = d.q_max; q >= d.q_min; --q) {
        std::string line;
        for (int p = d.p_min; p <= d.p_max; ++p) {
            char c = ' ';
            auto it = d.nodes.find({p, q});
            if (it != d.nodes.end())
                c = it->second >= 2 ? '@' : '*';
            else if (p == 0 || q == 0)
                c = '.';
            if (p > d.p_min) line += ' ';
            line += c;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string render_svg(const DiagramSpec& d) {
    const int cols = d.p_max - d.p_min + 1;
    const int rows = d.q_max - d.q_min + 1;
    const int width = (cols + 1) * kCell;
    const int height = (rows + 1) * kCell;
    auto x = [&](int p) { return (p - d.p_min + 1) * kCell; };
    auto y = [&](int q) { return (d.q_max - q + 1) * kCell; };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    if (!d.arrows.empty())
        s << "<defs><marker id=\"head\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" "
             "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"black\"/></marker></defs>\n";
    s << "<line class=\"axis\" x1=\"" << x(d.p_min) - kCell / 2 << "\" y1=\"" << y(0) << "\" x2=\""
      << x(d.p_max) + kCell / 2 << "\" y2=\"" << y(0) << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
    s << "<line class=\"axis\" x1=\"" << x(0) << "\" y1=\"" << y(d.q_min) + kCell / 2 << "\" x2=\"" << x(0)
      << "\" y2=\"" << y(d.q_max) - kCell / 2 << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
    for (const auto& [k, v] : d.nodes) {
        s << "<circle class=\"node\" cx=\"" << x(k.first) << "\" cy=\"" << y(k.second)
          << "\" r=\"3\" fill=\"black\"><title>(" << k.first << "," << k.second << "): " << v
          << "</title></circle>\n";
        if (v >= 2)
            s << "<circle class=\"ring\" cx=\"" << x(k.first) << "\" cy=\"" << y(k.second)
              << "\" r=\"7\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& k : d.arrows)
        s << "<line class=\"arrow\" x1=\"" << x(k.first) - 5 << "\" y1=\"" << y(k.second) + 5 << "\" x2=\""
          << x(k.first - 1) + 6 << "\" y2=\"" << y(k.second - 1) - 6
          << "\" stroke=\"black\" stroke-width=\"1\" marker-end=\"url(#head)\"/>\n";
    s << "</svg>\n";
    return s.str();
}

}  // namespace hodge
