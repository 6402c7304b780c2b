#include "ktri/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ktri/bijection.hpp"
#include "ktri/dyck.hpp"
#include "ktri/errors.hpp"
#include "ktri/gentree2.hpp"
#include "ktri/gentree_k.hpp"
#include "ktri/polygon.hpp"
#include "ktri/text.hpp"
#include "ktri/verify.hpp"

namespace ktri::cli {

namespace {

/// Bad (n,k) or a missing object: reported as a usage error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int k = 2;
    int n = 0;
    int m = 0;
    int n_max = 9;
    std::string method;
    std::string input;
    std::string object;
    bool tuples = false;
    bool trace = false;
    bool shifted = false;
    bool pairs = false;
};

void require_polygon(int n, int k) {
    if (k < 1) throw UsageError("--k must be at least 1");
    if (n < 2 * k + 1) throw UsageError("--n must be at least 2k+1 (got n=" + std::to_string(n) + ")");
}

/// Object text from --input (a path, or - for stdin) or the inline argument.
/// Inline text may use ';' or '/' in place of line breaks.
std::string read_object(const Options& o, std::istream& in) {
    if (!o.input.empty() && !o.object.empty()) throw UsageError("give either --input or an inline object, not both");
    if (!o.input.empty()) {
        std::ostringstream buffer;
        if (o.input == "-") {
            buffer << in.rdbuf();
        } else {
            std::ifstream file(o.input);
            if (!file) throw UsageError("cannot read " + o.input);
            buffer << file.rdbuf();
        }
        return buffer.str();
    }
    if (o.object.empty()) throw UsageError("no input object; use --input <path> or pass it inline");
    std::string text = o.object;
    std::replace(text.begin(), text.end(), ';', '\n');
    std::replace(text.begin(), text.end(), '/', '\n');
    return text;
}

KTriangulation read_triangulation(const Options& o, std::istream& in) {
    return KTriangulation::certify(parse_triangulation(read_object(o, in)));
}

std::string one_line(const PathPair& pair) { return pair.upper.steps() + "/" + pair.lower.steps(); }

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (int x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out.empty() ? "-" : out;
}

void do_enumerate(const Options& o, std::ostream& out) {
    require_polygon(o.n, o.k);
    const EnumerationLimits limits = EnumerationLimits::from_env();
    if (o.tuples) {
        for (const PathTuple& t : enumerate_tuples(o.n - 2 * o.k, o.k, limits)) {
            std::string line;
            for (const DyckPath& p : t.paths) line += (line.empty() ? "" : "/") + p.steps();
            out << line << '\n';
        }
        return;
    }
    const std::string method = o.method.empty() ? "brute" : o.method;
    const auto all = method == "tree" ? enumerate_tree(o.n, o.k, limits)
                                      : enumerate_brute(PolygonContext(o.n, o.k), limits);
    for (const KTriangulation& t : all) out << format_diagonal_list(t.diagonals()) << '\n';
}

void do_count(const Options& o, std::ostream& out) {
    require_polygon(o.n, o.k);
    const EnumerationLimits limits = EnumerationLimits::from_env();
    const std::string method = o.method.empty() ? "det" : o.method;
    if (method == "det") {
        out << jonsson_count(o.n, o.k) << '\n';
    } else if (method == "tree") {
        out << count_tree(o.n, o.k, limits) << '\n';
    } else {
        out << enumerate_brute(PolygonContext(o.n, o.k), limits).size() << '\n';
    }
}

void do_map(const Options& o, std::istream& in, std::ostream& out) {
    const KTriangulation t = read_triangulation(o, in);
    if (t.k() != 2) throw DomainError("map needs a 2-triangulation");
    if (t.n() < 6) {  // the pentagon has no iterations
        out << format_pair(psi(t));
        return;
    }
    const ColoredDiagram colored = color_diagram(t);
    if (o.trace) {
        for (const ColoringStep& s : colored.steps) {
            out << "iter=" << s.iteration << " r=" << s.r << " blue=" << s.blue.a << '-' << s.blue.b
                << " red=" << s.red.a << '-' << s.red.b << " merged=" << s.merged_left << '+' << s.merged_right
                << '\n';
        }
    }
    out << format_pair(psi_from_coloring(colored));
}

void do_unmap(const Options& o, std::istream& in, std::ostream& out) {
    const PathPair pair = parse_pair(read_object(o, in));
    out << format_triangulation(psi_inverse(pair.upper, pair.lower).diagonals());
}

void do_parent(const Options& o, std::istream& in, std::ostream& out) {
    const std::string text = read_object(o, in);
    if (looks_like_triangulation(text)) {
        const KTriangulation t = KTriangulation::certify(parse_triangulation(text));
        out << format_triangulation((t.k() == 2 ? parent2(t) : parent_k(t)).diagonals());
    } else {
        const PathPair pair = parse_pair(text);
        out << format_pair(pair_parent(PairEncoding::from_paths(pair.upper, pair.lower)).paths());
    }
}

void do_children(const Options& o, std::istream& in, std::ostream& out) {
    const std::string text = read_object(o, in);
    if (looks_like_triangulation(text)) {
        const KTriangulation t = KTriangulation::certify(parse_triangulation(text));
        if (t.k() == 2) {
            for (const auto& c : children2(t)) {
                out << "u=" << c.choice.u << " i=" << c.choice.i << '\t' << label2(c.child).str() << '\t'
                    << format_diagonal_list(c.child.diagonals()) << '\n';
            }
        } else {
            for (const auto& c : children_k(t)) {
                out << "u=" << c.choice.u << " b=" << join(c.choice.b) << '\t'
                    << format_diagonal_list(c.child.diagonals()) << '\n';
            }
        }
    } else {
        const PathPair pair = parse_pair(text);
        for (const auto& c : pair_children(PairEncoding::from_paths(pair.upper, pair.lower))) {
            out << "t=" << c.choice.t << ' ' << to_string(c.choice.rule) << " index=" << c.choice.index << '\t'
                << pair_label(c.child).str() << '\t' << one_line(c.child.paths()) << '\n';
        }
    }
}

void do_tree(const Options& o, std::ostream& out) {
    if (o.pairs) {
        const int m = o.m > 0 ? o.m : o.n - 4;
        if (m < 1) throw UsageError("tree --pairs needs --m >= 1 (or --n >= 5)");
        write_pair_tree(out, m);
        return;
    }
    require_polygon(o.n, o.k);
    if (o.k < 2) throw UsageError("the triangulation tree needs --k >= 2");
    write_triangulation_tree(out, o.k, o.n);
}

int do_verify(const Options& o, std::ostream& out) {
    require_polygon(o.n_max, o.k);
    bool all = true;
    for (const PropertyResult& r : run_invariant_suite(o.k, o.n_max, EnumerationLimits::from_env())) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) out << " : " << r.counterexample;
        out << '\n';
        all = all && r.passed;
    }
    return all ? ok : internal_error;
}

void do_render(const Options& o, std::istream& in, std::ostream& out) {
    const std::string text = read_object(o, in);
    if (looks_like_triangulation(text)) {
        out << render_diagram(parse_triangulation(text));
    } else {
        const PathPair pair = parse_pair(text);
        if (!dominates(pair.upper, pair.lower)) throw DomainError("P does not dominate Q");
        out << render_paths(pair, o.shifted);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-triangulations, Dyck path pairs and their generating trees", "ktri"};
    app.require_subcommand(1);
    Options o;

    auto add_kn = [&o](CLI::App* sub) {
        sub->add_option("--k", o.k, "number of allowed mutual crossings (default 2)");
        sub->add_option("--n", o.n, "number of polygon vertices")->required();
    };
    auto add_object = [&o](CLI::App* sub) {
        sub->add_option("--input", o.input, "file holding the object, - for stdin");
        sub->add_option("object", o.object, "inline object, lines separated by ';' or '/'");
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "list all k-triangulations (or path tuples)");
    add_kn(enumerate);
    enumerate->add_option("--method", o.method, "brute|tree")->check(CLI::IsMember({"brute", "tree"}));
    enumerate->add_flag("--tuples", o.tuples, "list k-tuples of non-crossing Dyck paths instead");

    CLI::App* count = app.add_subcommand("count", "count k-triangulations");
    add_kn(count);
    count->add_option("--method", o.method, "det|tree|brute")->check(CLI::IsMember({"det", "tree", "brute"}));

    CLI::App* map = app.add_subcommand("map", "2-triangulation to pair of Dyck paths");
    add_object(map);
    map->add_flag("--trace", o.trace, "print each coloring iteration");

    CLI::App* unmap = app.add_subcommand("unmap", "pair of Dyck paths to 2-triangulation");
    add_object(unmap);

    CLI::App* parent = app.add_subcommand("parent", "parent in the generating tree");
    add_object(parent);

    CLI::App* children = app.add_subcommand("children", "children in the generating tree");
    add_object(children);

    CLI::App* tree = app.add_subcommand("tree", "dump the generating tree down to a level");
    tree->add_option("--k", o.k, "k (default 2)");
    tree->add_option("--n", o.n, "deepest polygon size");
    tree->add_flag("--pairs", o.pairs, "dump the tree of Dyck path pairs instead");
    tree->add_option("--m", o.m, "deepest semilength for --pairs (default n-4)");

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--k", o.k, "k (default 2)");
    verify->add_option("--n-max", o.n_max, "largest polygon size (default 9)");

    CLI::App* render = app.add_subcommand("render", "ASCII drawing of a triangulation or a pair");
    add_object(render);
    render->add_flag("--shifted", o.shifted, "draw P from (0,1) and Q from (1,0)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (enumerate->parsed()) do_enumerate(o, out);
        else if (count->parsed()) do_count(o, out);
        else if (map->parsed()) do_map(o, in, out);
        else if (unmap->parsed()) do_unmap(o, in, out);
        else if (parent->parsed()) do_parent(o, in, out);
        else if (children->parsed()) do_children(o, in, out);
        else if (tree->parsed()) do_tree(o, out);
        else if (verify->parsed()) return do_verify(o, out);
        else if (render->parsed()) do_render(o, in, out);
        return ok;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }
}

}  // namespace ktri::cli
