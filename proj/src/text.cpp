#include "ktri/text.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <vector>

#include "ktri/errors.hpp"
#include "ktri/gentree2.hpp"
#include "ktri/gentree_k.hpp"

namespace ktri {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw DomainError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

std::string trim_right(std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line;
}

int digits(int x) { return static_cast<int>(std::to_string(x).size()); }

std::string pad_left(const std::string& s, int width) {
    return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), ' ') + s;
}

}  // namespace

std::string format_diagonal_list(const DiagonalSet& set) {
    if (set.empty()) return "-";
    std::string out;
    for (Diagonal d : set) {
        if (!out.empty()) out += ',';
        out += std::to_string(d.a) + "-" + std::to_string(d.b);
    }
    return out;
}

std::string format_triangulation(const DiagonalSet& set) {
    return "k=" + std::to_string(set.context().k()) + " n=" + std::to_string(set.context().n()) + "\n" +
           format_diagonal_list(set) + "\n";
}

std::string format_pair(const PathPair& pair) { return pair.upper.steps() + "\n" + pair.lower.steps() + "\n"; }

std::string format_tuple(const PathTuple& tuple) {
    std::string out;
    for (const DyckPath& p : tuple.paths) out += p.steps() + "\n";
    return out;
}

bool looks_like_triangulation(std::string_view text) { return text.substr(0, 2) == "k="; }

DiagonalSet parse_triangulation(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.size() != 2) throw DomainError("triangulation text needs exactly two lines");
    const std::string_view header = lines[0];
    const auto space = header.find(' ');
    if (header.substr(0, 2) != "k=" || space == std::string_view::npos || header.substr(space + 1, 2) != "n=") {
        throw DomainError("triangulation header must read 'k=<k> n=<n>'");
    }
    const int k = parse_int(header.substr(2, space - 2), "k");
    const int n = parse_int(header.substr(space + 3), "n");
    const PolygonContext ctx(n, k);

    std::vector<Diagonal> ds;
    std::string_view body = lines[1];
    if (body != "-") {
        while (true) {
            const auto comma = body.find(',');
            const std::string_view item = body.substr(0, comma);
            const auto dash = item.find('-');
            if (dash == std::string_view::npos) throw DomainError("malformed diagonal '" + std::string(item) + "'");
            ds.push_back({parse_int(item.substr(0, dash), "vertex"), parse_int(item.substr(dash + 1), "vertex")});
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
    }
    if (!std::is_sorted(ds.begin(), ds.end())) throw DomainError("diagonals must be sorted by (a,b)");
    return DiagonalSet(ctx, std::move(ds));
}

PathPair parse_pair(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.size() != 2) throw DomainError("pair text needs exactly two lines");
    PathPair pair{DyckPath::parse(lines[0]), DyckPath::parse(lines[1])};
    if (pair.upper.semilength() != pair.lower.semilength()) throw DomainError("paths differ in semilength");
    return pair;
}

PathTuple parse_tuple(std::string_view text) {
    PathTuple tuple;
    for (std::string_view line : split_lines(text)) tuple.paths.push_back(DyckPath::parse(line));
    if (tuple.paths.empty()) throw DomainError("empty tuple");
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        if (!dominates(tuple.paths[i - 1], tuple.paths[i])) throw DomainError("tuple paths cross");
    }
    return tuple;
}

std::string render_diagram(const DiagonalSet& set) {
    const PolygonContext& ctx = set.context();
    const int n = ctx.n();
    const int k = ctx.k();
    const int width = digits(n);
    const int label_width = digits(std::max(1, n - k - 1));

    std::string out = std::string(static_cast<std::size_t>(label_width), ' ');
    for (int b = k + 2; b <= n; ++b) out += " " + pad_left(std::to_string(b), width);
    out = trim_right(out) + "\n";

    for (int a = 1; a <= n - k - 1; ++a) {
        std::string line = pad_left(std::to_string(a), label_width);
        bool any_cell = false;
        for (int b = k + 2; b <= n; ++b) {
            std::string mark = " ";
            if (ctx.is_cell({a, b})) {
                any_cell = true;
                mark = set.contains({a, b}) ? "X" : ".";
            }
            line += " " + pad_left(mark, width);
        }
        if (any_cell) out += trim_right(line) + "\n";
    }
    return out;
}

std::string render_paths(const PathPair& pair, bool shifted) {
    const int m = pair.upper.semilength();
    const int size = shifted ? m + 1 : m;  // largest coordinate
    const int side = 2 * size + 1;
    std::vector<std::string> canvas(static_cast<std::size_t>(side), std::string(static_cast<std::size_t>(side), ' '));
    for (int y = 0; y <= size; ++y) {
        for (int x = 0; x <= size; ++x) canvas[static_cast<std::size_t>(2 * y)][static_cast<std::size_t>(2 * x)] = '.';
    }

    auto plot = [&](const DyckPath& path, int x, int y, char mark) {
        auto put = [&](int cx, int cy) {
            char& c = canvas[static_cast<std::size_t>(cy)][static_cast<std::size_t>(cx)];
            c = (c == '.' || c == ' ' || c == mark) ? mark : '*';
        };
        put(2 * x, 2 * y);
        for (char step : path.steps()) {
            const int dx = step == 'E' ? 1 : 0;
            const int dy = step == 'N' ? 1 : 0;
            put(2 * x + dx, 2 * y + dy);
            x += dx;
            y += dy;
            put(2 * x, 2 * y);
        }
    };
    plot(pair.upper, 0, shifted ? 1 : 0, '#');
    plot(pair.lower, shifted ? 1 : 0, 0, 'o');

    std::string out;
    for (int row = side - 1; row >= 0; --row) out += trim_right(canvas[static_cast<std::size_t>(row)]) + "\n";
    return out;
}

void write_triangulation_tree(std::ostream& out, int k, int n) {
    if (n < 2 * k + 1) throw DomainError("tree depth: n must be at least 2k+1");
    auto visit = [&](auto& self, const KTriangulation& t) -> void {
        const std::string label = k == 2 ? label2(t).str() : "-";
        out << (t.n() - 2 * k - 1) << '\t' << label << '\t' << format_diagonal_list(t.diagonals()) << '\n';
        if (t.n() == n) return;
        if (k == 2) {
            for (const auto& c : children2(t)) self(self, c.child);
        } else {
            for (const auto& c : children_k(t)) self(self, c.child);
        }
    };
    visit(visit, KTriangulation::empty_polygon(k));
}

void write_pair_tree(std::ostream& out, int m) {
    if (m < 1) throw DomainError("tree depth: m must be positive");
    auto visit = [&](auto& self, const PairEncoding& e) -> void {
        const PathPair pp = e.paths();
        out << (e.semilength() - 1) << '\t' << pair_label(e).str() << '\t' << pp.upper.steps() << '/'
            << pp.lower.steps() << '\n';
        if (e.semilength() == m) return;
        for (const auto& c : pair_children(e)) self(self, c.child);
    };
    visit(visit, PairEncoding::root());
}

}  // namespace ktri
