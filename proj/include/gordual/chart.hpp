#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gordual/degreewise.hpp"

namespace gordual {

/* Adams-style chart: dots at (x, filtration), edges for multiplications.
 * Vertical and exotic edges are multiplication by p (the distinction is
 * display only: exotic edges may jump several filtrations); generator edges
 * are multiplication by a named ring generator. In homology orientation x is
 * the internal degree; in cohomology orientation x is the cohomological
 * degree and generator edges point to smaller x. */
struct Chart {
    enum class EdgeKind { vertical, generator, exotic };

    struct Dot {
        long x, y;
        auto operator<=>(const Dot&) const = default;
    };

    struct Edge {
        long x1, y1, x2, y2;
        EdgeKind kind;
        std::string gen;  // for generator edges

        auto key() const { return std::tie(x1, y1, x2, y2, kind, gen); }
        bool operator<(const Edge& o) const { return key() < o.key(); }
        bool operator==(const Edge& o) const { return key() == o.key(); }
    };

    std::string name = "chart";
    bool cohomology = false;
    long p = 2;
    std::vector<Generator> gens;
    std::set<long> incomplete;  // columns with truncated data
    std::vector<Dot> dots;
    std::vector<Edge> edges;

    std::optional<long> gen_degree(const std::string& g) const {
        for (const auto& gen : gens)
            if (gen.name == g) return gen.degree;
        return std::nullopt;
    }

    bool has_dot(long x, long y) const {
        for (const auto& d : dots)
            if (d.x == x && d.y == y) return true;
        return false;
    }
};

/* A tower: dots of one column chained by vertical/exotic edges, sorted by
 * filtration. Its group is Z/p^{number of dots}. */
struct Tower {
    long x = 0;
    std::vector<long> ys;  // ascending
    long height() const { return static_cast<long>(ys.size()); }
    std::optional<std::size_t> position(long y) const {
        for (std::size_t i = 0; i < ys.size(); ++i)
            if (ys[i] == y) return i;
        return std::nullopt;
    }
};

namespace chart_detail {

inline void validate_chart(const Chart& c) {
    std::set<std::pair<long, long>> seen;
    for (const auto& d : c.dots)
        if (!seen.insert({d.x, d.y}).second)
            throw SyntaxError(0, 0, "duplicate dot " + std::to_string(d.x) + " " +
                                        std::to_string(d.y));
    for (const auto& e : c.edges) {
        auto desc = std::to_string(e.x1) + " " + std::to_string(e.y1) + " -> " +
                    std::to_string(e.x2) + " " + std::to_string(e.y2);
        if (!c.has_dot(e.x1, e.y1) || !c.has_dot(e.x2, e.y2)) throw DanglingEdgeError(desc);
        switch (e.kind) {
            case Chart::EdgeKind::vertical:
                if (e.x1 != e.x2 || e.y2 != e.y1 + 1)
                    throw BadSlopeError("vertical edge " + desc);
                break;
            case Chart::EdgeKind::exotic:
                if (e.x1 != e.x2 || e.y2 <= e.y1) throw BadSlopeError("exotic edge " + desc);
                break;
            case Chart::EdgeKind::generator: {
                auto deg = c.gen_degree(e.gen);
                if (!deg) throw DanglingEdgeError("unknown generator " + e.gen + " on " + desc);
                long want = c.cohomology ? e.x1 - *deg : e.x1 + *deg;
                if (e.x2 != want)
                    throw BadSlopeError("generator edge " + desc + " must reach x = " +
                                        std::to_string(want));
                break;
            }
        }
    }
}

}  // namespace chart_detail

inline Chart parse_chart(const std::string& text) {
    Chart c;
    bool saw_header = false;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::string word;
        if (!(ls >> word)) continue;
        auto need_long = [&](const char* what) {
            long v;
            if (!(ls >> v)) throw SyntaxError(lineno, 1, std::string("expected ") + what);
            return v;
        };
        if (word == "chart") {
            std::string name, orient, prime;
            if (!(ls >> name >> orient >> prime))
                throw SyntaxError(lineno, 1, "chart <name> orientation=... prime=...");
            c.name = name;
            if (orient == "orientation=homology")
                c.cohomology = false;
            else if (orient == "orientation=cohomology")
                c.cohomology = true;
            else
                throw SyntaxError(lineno, 1, "bad orientation field " + orient);
            if (prime.rfind("prime=", 0) != 0)
                throw SyntaxError(lineno, 1, "bad prime field " + prime);
            c.p = std::stol(prime.substr(6));
            if (!is_prime(c.p)) throw SyntaxError(lineno, 1, "prime=" + prime.substr(6));
            saw_header = true;
        } else if (word == "gen") {
            std::string name;
            if (!(ls >> name)) throw SyntaxError(lineno, 1, "gen <name> <degree>");
            long deg = need_long("generator degree");
            if (c.gen_degree(name)) throw SyntaxError(lineno, 1, "duplicate gen " + name);
            c.gens.push_back({name, deg});
        } else if (word == "incomplete") {
            c.incomplete.insert(need_long("column"));
        } else if (word == "dot") {
            long x = need_long("x"), y = need_long("y");
            if (y < 0) throw SyntaxError(lineno, 1, "negative filtration");
            c.dots.push_back({x, y});
        } else if (word == "edge") {
            Chart::Edge e;
            e.x1 = need_long("x1");
            e.y1 = need_long("y1");
            e.x2 = need_long("x2");
            e.y2 = need_long("y2");
            std::string kind;
            if (!(ls >> kind)) throw SyntaxError(lineno, 1, "missing edge kind");
            if (kind == "vert")
                e.kind = Chart::EdgeKind::vertical;
            else if (kind == "exotic")
                e.kind = Chart::EdgeKind::exotic;
            else if (kind.rfind("gen:", 0) == 0) {
                e.kind = Chart::EdgeKind::generator;
                e.gen = kind.substr(4);
            } else
                throw SyntaxError(lineno, 1, "bad edge kind " + kind);
            c.edges.push_back(std::move(e));
        } else {
            throw SyntaxError(lineno, 1, "unknown directive " + word);
        }
        std::string trail;
        if (ls >> trail) throw SyntaxError(lineno, 1, "trailing input " + trail);
    }
    if (!saw_header && !(c.dots.empty() && c.edges.empty()))
        throw SyntaxError(1, 1, "missing chart header");
    chart_detail::validate_chart(c);
    return c;
}

/* Canonical serialization: header, generators, incomplete flags, dots sorted
 * by (x, y), edges sorted by endpoints. Byte-exact for comparisons. */
inline std::string emit_chart(const Chart& c) {
    std::ostringstream os;
    os << "chart " << c.name << " orientation=" << (c.cohomology ? "cohomology" : "homology")
       << " prime=" << c.p << "\n";
    auto gens = c.gens;
    std::sort(gens.begin(), gens.end(), [](const Generator& a, const Generator& b) {
        return std::tie(a.degree, a.name) < std::tie(b.degree, b.name);
    });
    for (const auto& g : gens) os << "gen " << g.name << " " << g.degree << "\n";
    for (long x : c.incomplete) os << "incomplete " << x << "\n";
    auto dots = c.dots;
    std::sort(dots.begin(), dots.end());
    for (const auto& d : dots) os << "dot " << d.x << " " << d.y << "\n";
    auto edges = c.edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) {
        os << "edge " << e.x1 << " " << e.y1 << " " << e.x2 << " " << e.y2 << " ";
        switch (e.kind) {
            case Chart::EdgeKind::vertical: os << "vert"; break;
            case Chart::EdgeKind::exotic: os << "exotic"; break;
            case Chart::EdgeKind::generator: os << "gen:" << e.gen; break;
        }
        os << "\n";
    }
    return os.str();
}

/* Towers of one column: dots chained by vertical/exotic edges. Branching
 * raises AmbiguousTower. Returned sorted by height descending, then by
 * bottom filtration (the order used for group summands). */
inline std::vector<Tower> column_towers(const Chart& c, long x) {
    std::vector<long> ys;
    for (const auto& d : c.dots)
        if (d.x == x) ys.push_back(d.y);
    std::sort(ys.begin(), ys.end());
    std::map<long, long> up, down;  // y -> linked y
    for (const auto& e : c.edges) {
        if (e.kind == Chart::EdgeKind::generator || e.x1 != x) continue;
        long lo = std::min(e.y1, e.y2), hi = std::max(e.y1, e.y2);
        if (up.count(lo) || down.count(hi)) throw AmbiguousTowerError(x);
        up[lo] = hi;
        down[hi] = lo;
    }
    std::vector<Tower> towers;
    for (long y : ys) {
        if (down.count(y)) continue;  // not a bottom
        Tower t;
        t.x = x;
        long cur = y;
        t.ys.push_back(cur);
        while (up.count(cur)) {
            cur = up[cur];
            t.ys.push_back(cur);
        }
        towers.push_back(std::move(t));
    }
    std::sort(towers.begin(), towers.end(), [](const Tower& a, const Tower& b) {
        if (a.ys.size() != b.ys.size()) return a.ys.size() > b.ys.size();
        return a.ys.front() < b.ys.front();
    });
    return towers;
}

inline std::set<long> chart_columns(const Chart& c) {
    std::set<long> xs;
    for (const auto& d : c.dots) xs.insert(d.x);
    return xs;
}

}  // namespace gordual
