#pragma once

#include "gordual/chart.hpp"
#include "gordual/matlis.hpp"

namespace gordual {

/* Dual chart for a duality of shift a: columns move by x -> x - a, towers
 * flip upside down (y -> y_min + y_max - y within each tower), plain and
 * exotic p-multiplications swap, and generator edges reverse direction
 * across the moved towers. Orientation toggles. */
inline Chart dual_chart(const Chart& c, long a) {
    Chart d;
    d.name = c.name + "_dual";
    d.cohomology = !c.cohomology;
    d.p = c.p;
    d.gens = c.gens;
    for (long x : c.incomplete) d.incomplete.insert(x - a);

    /* flipped position of each dot within its tower */
    std::map<std::pair<long, long>, std::pair<long, long>> image;
    for (long x : chart_columns(c)) {
        for (const auto& t : column_towers(c, x)) {
            long span = t.ys.front() + t.ys.back();
            for (long y : t.ys) image[{x, y}] = {x - a, span - y};
        }
    }
    for (const auto& dot : c.dots) {
        auto [nx, ny] = image.at({dot.x, dot.y});
        d.dots.push_back({nx, ny});
    }

    for (const auto& e : c.edges) {
        auto [sx, sy] = image.at({e.x1, e.y1});
        auto [tx, ty] = image.at({e.x2, e.y2});
        Chart::Edge de;
        if (e.kind == Chart::EdgeKind::generator) {
            /* dual multiplication runs from the dual of the target */
            de = {tx, ty, sx, sy, Chart::EdgeKind::generator, e.gen};
        } else {
            Chart::EdgeKind k = e.kind == Chart::EdgeKind::vertical ? Chart::EdgeKind::exotic
                                                                    : Chart::EdgeKind::vertical;
            long lo = std::min(sy, ty), hi = std::max(sy, ty);
            if (k == Chart::EdgeKind::vertical && hi != lo + 1) k = Chart::EdgeKind::exotic;
            de = {sx, lo, sx, hi, k, ""};
        }
        d.edges.push_back(std::move(de));
    }
    chart_detail::validate_chart(d);
    return d;
}

/* Module-level diff of two charts: per column, the multiset of tower
 * heights; per generator and column, the number of generator edges leaving
 * it. Dot positions inside towers are presentation detail and are not
 * compared. Columns flagged incomplete in either chart are skipped, as are
 * generator-edge counts whose source or target column is skipped. */
struct ChartDiff {
    std::vector<std::string> lines;
    bool empty() const { return lines.empty(); }
    std::string to_string() const {
        std::string s;
        for (const auto& l : lines) s += l + "\n";
        return s;
    }
};

inline ChartDiff compare_charts(const Chart& a, const Chart& b) {
    ChartDiff diff;
    if (a.p != b.p) diff.lines.push_back("prime mismatch");
    if (a.cohomology != b.cohomology) diff.lines.push_back("orientation mismatch");
    auto gens_of = [](const Chart& c) {
        std::set<std::pair<std::string, long>> g;
        for (const auto& x : c.gens) g.insert({x.name, x.degree});
        return g;
    };
    if (gens_of(a) != gens_of(b)) diff.lines.push_back("generator mismatch");
    if (!diff.empty()) return diff;

    std::set<long> skip = a.incomplete;
    skip.insert(b.incomplete.begin(), b.incomplete.end());
    auto skipped = [&](long x) { return skip.count(x) > 0; };

    std::set<long> columns = chart_columns(a);
    for (long x : chart_columns(b)) columns.insert(x);
    for (long x : columns) {
        if (skipped(x)) continue;
        auto heights = [&](const Chart& c) {
            std::vector<long> h;
            for (const auto& t : column_towers(c, x)) h.push_back(t.height());
            return h;
        };
        auto ha = heights(a), hb = heights(b);
        if (ha != hb) {
            std::string s = "column " + std::to_string(x) + ": towers";
            auto app = [&](const std::vector<long>& h) {
                for (long v : h) s += " " + std::to_string(v);
            };
            app(ha);
            s += " vs";
            app(hb);
            diff.lines.push_back(s);
        }
        for (const auto& g : a.gens) {
            long target = a.cohomology ? x - g.degree : x + g.degree;
            if (skipped(target)) continue;
            auto count = [&](const Chart& c) {
                long n = 0;
                for (const auto& e : c.edges)
                    if (e.kind == Chart::EdgeKind::generator && e.gen == g.name && e.x1 == x) ++n;
                return n;
            };
            long ca = count(a), cb = count(b);
            if (ca != cb)
                diff.lines.push_back("column " + std::to_string(x) + ": " + g.name + "-edges " +
                                     std::to_string(ca) + " vs " + std::to_string(cb));
        }
    }
    return diff;
}

/* Chart as a degreewise module: each tower of height h contributes Z/p^h in
 * its column's internal degree, generator edges assemble into action
 * matrices. An edge from position i of a tower to position j of another
 * (1-based from the bottom) contributes the map g |-> p^{j-i} g'. */
inline DegreewiseModule chart_to_module(const Chart& c, const GradedRing& ring) {
    if (ring.coeff.p != c.p) throw AmbientMismatchError("chart prime differs from ring prime");
    for (const auto& g : c.gens) {
        auto idx = ring.find_var(g.name);
        if (!idx || ring.var_degree(*idx) != g.degree)
            throw AmbientMismatchError("chart generator " + g.name + " not in the ring");
    }
    auto degree_of = [&](long x) { return c.cohomology ? -x : x; };

    DegreewiseModule dm;
    dm.p = c.p;
    std::set<long> degrees;
    for (const auto& d : c.dots) degrees.insert(degree_of(d.x));
    if (degrees.empty()) {
        dm.lo = 0;
        dm.hi = 0;
        dm.pieces.resize(1);
        return dm;
    }
    dm.lo = *degrees.begin();
    dm.hi = *degrees.rbegin();
    dm.complete_below = dm.complete_above = c.incomplete.empty();

    std::map<long, std::vector<Tower>> towers;  // by internal degree
    for (long x : chart_columns(c)) towers[degree_of(x)] = column_towers(c, x);
    for (long d = dm.lo; d <= dm.hi; ++d) {
        DegreewiseModule::Piece pc;
        for (const auto& t : towers[d]) pc.exps.push_back(t.height());
        dm.pieces.push_back(std::move(pc));
    }

    for (const auto& g : c.gens) {
        DegreewiseModule::Action act;
        act.gen = g.name;
        act.degree = g.degree;
        act.maps.resize(dm.hi - dm.lo + 1);
        for (long d = dm.lo; d + g.degree <= dm.hi; ++d) {
            const auto& src = towers[d];
            const auto& dst = towers[d + g.degree];
            /* the lowest edge per tower pair determines the entry */
            std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>
                best;
            for (const auto& e : c.edges) {
                if (e.kind != Chart::EdgeKind::generator || e.gen != g.name) continue;
                if (degree_of(e.x1) != d) continue;
                for (std::size_t s = 0; s < src.size(); ++s) {
                    auto i = src[s].position(e.y1);
                    if (!i) continue;
                    for (std::size_t t = 0; t < dst.size(); ++t) {
                        auto j = dst[t].position(e.y2);
                        if (!j) continue;
                        auto key = std::make_pair(t, s);
                        if (!best.count(key) || *i < best[key].first) best[key] = {*i, *j};
                    }
                }
            }
            Mat map(dst.size(), src.size());
            for (const auto& [key, ij] : best) {
                long shift = static_cast<long>(ij.second) - static_cast<long>(ij.first);
                Rational entry = shift >= 0 ? Rational(pow_int(c.p, shift)) : Rational(0);
                map.at(key.first, key.second) =
                    Rational(reduce_mod_p_power(entry, c.p, dst[key.first].height()));
            }
            act.maps[d - dm.lo] = std::move(map);
        }
        dm.actions.push_back(std::move(act));
    }
    return dm;
}

/* Deterministic SVG rendering: black dots and lines, red exotic edges, axis
 * labels every 4. Cohomology charts draw right-to-left. */
inline std::string emit_chart_svg(const Chart& c) {
    long xmin = 0, xmax = 0, ymax = 0;
    bool first = true;
    for (const auto& d : c.dots) {
        if (first) {
            xmin = xmax = d.x;
            first = false;
        }
        xmin = std::min(xmin, d.x);
        xmax = std::max(xmax, d.x);
        ymax = std::max(ymax, d.y);
    }
    const long unit = 24, pad = 30;
    auto sx = [&](long x) {
        long col = c.cohomology ? xmax - x : x - xmin;
        return pad + col * unit;
    };
    auto sy = [&](long y) { return pad + (ymax - y) * unit; };
    long width = 2 * pad + (xmax - xmin) * unit, height = 2 * pad + (ymax + 1) * unit;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<line x1=\"" << pad - 15 << "\" y1=\"" << sy(0) << "\" x2=\"" << width - pad + 15
       << "\" y2=\"" << sy(0) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (long x = xmin; x <= xmax; ++x) {
        if (x % 4 != 0) continue;
        os << "<text x=\"" << sx(x) << "\" y=\"" << sy(0) + 20
           << "\" font-size=\"12\" text-anchor=\"middle\">" << x << "</text>\n";
    }
    auto edges = c.edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) {
        const char* color = e.kind == Chart::EdgeKind::exotic ? "red" : "black";
        os << "<line x1=\"" << sx(e.x1) << "\" y1=\"" << sy(e.y1) << "\" x2=\"" << sx(e.x2)
           << "\" y2=\"" << sy(e.y2) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    }
    auto dots = c.dots;
    std::sort(dots.begin(), dots.end());
    for (const auto& d : dots)
        os << "<circle cx=\"" << sx(d.x) << "\" cy=\"" << sy(d.y)
           << "\" r=\"3\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace gordual
