#include "ktri/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "ktri/bijection.hpp"
#include "ktri/dyck.hpp"
#include "ktri/errors.hpp"
#include "ktri/gentree2.hpp"
#include "ktri/gentree_k.hpp"
#include "ktri/lemmas.hpp"
#include "ktri/polygon.hpp"
#include "ktri/text.hpp"

namespace ktri {

namespace {

using Check = std::function<std::optional<std::string>()>;

PropertyResult evaluate(std::string name, const Check& check) {
    PropertyResult out{.name = std::move(name)};
    try {
        if (auto failure = check()) {
            out.passed = false;
            out.counterexample = *failure;
        }
    } catch (const std::exception& e) {
        out.passed = false;
        out.counterexample = std::string("exception: ") + e.what();
    }
    return out;
}

std::string one_line(const DiagonalSet& set) {
    return "k=" + std::to_string(set.context().k()) + " n=" + std::to_string(set.context().n()) + " " +
           format_diagonal_list(set);
}

std::string one_line(const PathPair& pair) { return pair.upper.steps() + "/" + pair.lower.steps(); }

bool pairwise_crossing(const std::vector<Diagonal>& ds) {
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t j = i + 1; j < ds.size(); ++j) {
            if (!crosses(ds[i], ds[j])) return false;
        }
    }
    return true;
}

struct Level {
    int n;
    std::vector<KTriangulation> brute;
};

}  // namespace

std::vector<PropertyResult> run_invariant_suite(int k, int n_max, const EnumerationLimits& limits) {
    if (k < 1 || n_max < 2 * k + 1) throw DomainError("verify needs k >= 1 and n-max >= 2k+1");

    std::vector<Level> levels;
    for (int n = 2 * k + 1; n <= n_max; ++n) {
        const PolygonContext ctx(n, k);
        if (lambda_cells(ctx).size() > limits.max_cells) break;
        levels.push_back({n, enumerate_brute(ctx, limits)});
    }
    const std::string range = "n=" + std::to_string(2 * k + 1) + ".." +
                              std::to_string(levels.empty() ? 2 * k : levels.back().n);
    std::vector<PropertyResult> results;
    auto add = [&](const std::string& name, const Check& check) { results.push_back(evaluate(name + " " + range, check)); };

    add("brute-count-equals-determinant", [&]() -> std::optional<std::string> {
        for (const Level& level : levels) {
            if (BigInt(level.brute.size()) != jonsson_count(level.n, k)) return "n=" + std::to_string(level.n);
        }
        return std::nullopt;
    });

    add("tuple-count-equals-determinant", [&]() -> std::optional<std::string> {
        for (const Level& level : levels) {
            const int m = level.n - 2 * k;
            if (static_cast<std::size_t>(m * k) > limits.max_tuple_cells) continue;
            if (BigInt(enumerate_tuples(m, k, limits).size()) != jonsson_count(level.n, k)) {
                return "m=" + std::to_string(m);
            }
        }
        return std::nullopt;
    });

    add("cardinality-and-maximality", [&]() -> std::optional<std::string> {
        for (const Level& level : levels) {
            for (const KTriangulation& t : level.brute) {
                const auto& set = t.diagonals();
                if (static_cast<int>(set.size()) != t.context().diagonal_count() || has_crossing(set, k + 1) ||
                    !is_k_triangulation(set)) {
                    return one_line(set);
                }
            }
        }
        return std::nullopt;
    });

    add("crossing-criterion-matches-pairwise", [&]() -> std::optional<std::string> {
        for (const Level& level : levels) {
            if (level.n > 10) break;
            const auto cells = lambda_cells(PolygonContext(level.n, k));
            for (std::size_t i = 0; i < cells.size(); ++i) {
                for (std::size_t j = i + 1; j < cells.size(); ++j) {
                    std::vector<Diagonal> two{cells[i], cells[j]};
                    if (is_t_crossing(two) != pairwise_crossing(two)) return "pair in n=" + std::to_string(level.n);
                    for (std::size_t l = j + 1; l < cells.size(); ++l) {
                        std::vector<Diagonal> three{cells[i], cells[j], cells[l]};
                        if (is_t_crossing(three) != pairwise_crossing(three)) {
                            return "triple in n=" + std::to_string(level.n);
                        }
                    }
                }
            }
        }
        return std::nullopt;
    });

    add("structure-lemmas", [&]() -> std::optional<std::string> {
        for (const Level& level : levels) {
            for (const KTriangulation& t : level.brute) {
                const LemmaReport report = check_structure_lemmas(t.diagonals());
                for (const LemmaResult& r : report.results) {
                    if (!r.passed) return lemma_name(r.lemma) + " on " + one_line(t.diagonals()) + ": " + r.witness;
                }
            }
        }
        return std::nullopt;
    });

    add("completion-idempotent-and-monotone", [&]() -> std::optional<std::string> {
        for (const Level& level : levels) {
            for (const KTriangulation& t : level.brute) {
                if (complete_to_maximal(t.diagonals()) != t) return one_line(t.diagonals());
                for (Diagonal d : t.diagonals()) {
                    const DiagonalSet partial = t.diagonals().without(d);
                    const KTriangulation full = complete_to_maximal(partial);
                    for (Diagonal x : partial) {
                        if (!full.contains(x)) return one_line(partial);
                    }
                }
            }
        }
        return std::nullopt;
    });

    if (k >= 2) {
        add("tree-round-trip-and-partition", [&]() -> std::optional<std::string> {
            for (std::size_t l = 1; l < levels.size(); ++l) {
                std::vector<KTriangulation> images;
                for (const KTriangulation& t : levels[l - 1].brute) {
                    int previous_u = 0;
                    for (const KChild& c : children_k(t)) {
                        if (parent_k(c.child) != t) return one_line(c.child.diagonals());
                        if (c.choice.u < previous_u) return "children out of order under " + one_line(t.diagonals());
                        previous_u = c.choice.u;
                        images.push_back(c.child);
                    }
                }
                std::sort(images.begin(), images.end());
                if (images != levels[l].brute) return "partition fails at n=" + std::to_string(levels[l].n);
            }
            return std::nullopt;
        });

        add("tree-enumeration-equals-brute", [&]() -> std::optional<std::string> {
            for (const Level& level : levels) {
                if (jonsson_count(level.n, k) > limits.max_tree_count) continue;
                if (enumerate_tree(level.n, k, limits) != level.brute) return "n=" + std::to_string(level.n);
            }
            return std::nullopt;
        });

        add("corner-monotone", [&]() -> std::optional<std::string> {
            for (const Level& level : levels) {
                if (level.n == 2 * k + 1) continue;
                for (const KTriangulation& t : level.brute) {
                    const int r = corner_k(t);
                    for (const KChild& c : children_k(t)) {
                        if (corner_k(c.child) != c.choice.u || c.choice.u < r) return one_line(c.child.diagonals());
                    }
                }
            }
            return std::nullopt;
        });
    }

    if (k == 2) {
        add("label-succession-rule", [&]() -> std::optional<std::string> {
            for (const Level& level : levels) {
                for (const KTriangulation& t : level.brute) {
                    std::vector<TreeLabel> got;
                    for (const auto& c : children2(t)) got.push_back(label2(c.child));
                    std::vector<TreeLabel> want = label_children(label2(t));
                    std::sort(got.begin(), got.end());
                    std::sort(want.begin(), want.end());
                    if (got != want || std::adjacent_find(got.begin(), got.end()) != got.end()) {
                        return one_line(t.diagonals());
                    }
                }
            }
            return std::nullopt;
        });

        add("gentree2-round-trip-and-partition", [&]() -> std::optional<std::string> {
            for (std::size_t l = 1; l < levels.size(); ++l) {
                std::vector<KTriangulation> images;
                for (const KTriangulation& t : levels[l - 1].brute) {
                    for (const auto& c : children2(t)) {
                        if (parent2(c.child) != t) return one_line(c.child.diagonals());
                        images.push_back(c.child);
                    }
                }
                std::sort(images.begin(), images.end());
                if (images != levels[l].brute) return "partition fails at n=" + std::to_string(levels[l].n);
            }
            return std::nullopt;
        });

        add("pair-tree-round-trip-and-partition", [&]() -> std::optional<std::string> {
            std::vector<PairEncoding> previous{PairEncoding::root()};
            for (std::size_t l = 1; l < levels.size(); ++l) {
                const int m = levels[l].n - 4;
                std::vector<PairEncoding> images;
                for (const PairEncoding& e : previous) {
                    std::vector<TreeLabel> got;
                    for (const auto& c : pair_children(e)) {
                        if (pair_parent(c.child) != e || s_param(c.child) != c.choice.t + 1) {
                            return one_line(c.child.paths());
                        }
                        got.push_back(pair_label(c.child));
                        images.push_back(c.child);
                    }
                    std::vector<TreeLabel> want = label_children(pair_label(e));
                    std::sort(got.begin(), got.end());
                    std::sort(want.begin(), want.end());
                    if (got != want) return "label rule fails under " + one_line(e.paths());
                }
                std::vector<PairEncoding> all;
                for (const PathTuple& tuple : enumerate_tuples(m, 2, limits)) {
                    all.push_back(PairEncoding::from_paths(tuple.paths[0], tuple.paths[1]));
                }
                std::sort(images.begin(), images.end());
                std::sort(all.begin(), all.end());
                if (images != all) return "partition fails at m=" + std::to_string(m);
                previous = std::move(all);
            }
            return std::nullopt;
        });

        add("psi-bijective-onto-pairs", [&]() -> std::optional<std::string> {
            for (const Level& level : levels) {
                std::set<PathPair> image;
                for (const KTriangulation& t : level.brute) {
                    if (!image.insert(psi(t)).second) return "collision at " + one_line(t.diagonals());
                }
                std::set<PathPair> pairs;
                for (const PathTuple& tuple : enumerate_tuples(level.n - 4, 2, limits)) {
                    pairs.insert({tuple.paths[0], tuple.paths[1]});
                }
                if (image != pairs) return "image differs at n=" + std::to_string(level.n);
            }
            return std::nullopt;
        });

        add("psi-inverse-and-tree-agree", [&]() -> std::optional<std::string> {
            for (const Level& level : levels) {
                for (const KTriangulation& t : level.brute) {
                    const PathPair pp = psi(t);
                    if (psi_tree(t) != pp || psi_inverse(pp.upper, pp.lower) != t) return one_line(t.diagonals());
                }
            }
            return std::nullopt;
        });

        add("coloring-tie-break-independent", [&]() -> std::optional<std::string> {
            for (const Level& level : levels) {
                for (const KTriangulation& t : level.brute) {
                    const ColoredDiagram x = color_diagram(t, TieBreak::lowest_blue_highest_red);
                    const ColoredDiagram y = color_diagram(t, TieBreak::highest_blue_lowest_red);
                    for (int j = 4; j <= level.n; ++j) {
                        if (x.alpha(j) != y.alpha(j) || x.beta(j) != y.beta(j)) return one_line(t.diagonals());
                    }
                }
            }
            return std::nullopt;
        });

        add("column-counts-match-exponents", [&]() -> std::optional<std::string> {
            for (const Level& level : levels) {
                const int n = level.n;
                for (const KTriangulation& t : level.brute) {
                    const PathPair pp = psi(t);
                    const PairEncoding e = PairEncoding::from_paths(pp.upper, pp.lower);
                    // (h_4, ..., h_n) = (q_{n-4}, p_{n-4}+q_{n-5}, ..., p_2+q_1, p_1)
                    for (int j = 4; j <= n; ++j) {
                        const int idx = n - j;  // h_j = p_{idx+1} + q_idx with p_{n-3} = q_0 = 0
                        const int p = idx + 1 <= n - 4 ? e.p(idx + 1) : 0;
                        const int q = idx >= 1 ? e.q(idx) : 0;
                        if (column_count(t, j) != p + q) return one_line(t.diagonals());
                    }
                }
            }
            return std::nullopt;
        });

        add("general-tree-specializes-to-k2", [&]() -> std::optional<std::string> {
            for (const Level& level : levels) {
                for (const KTriangulation& t : level.brute) {
                    if (level.n >= 6 && (corner_k(t) != corner(t) || parent_k(t) != parent2(t))) {
                        return one_line(t.diagonals());
                    }
                    std::vector<KTriangulation> a;
                    std::vector<KTriangulation> b;
                    for (const auto& c : children_k(t)) a.push_back(c.child);
                    for (const auto& c : children2(t)) b.push_back(c.child);
                    std::sort(a.begin(), a.end());
                    std::sort(b.begin(), b.end());
                    if (a != b) return one_line(t.diagonals());
                }
            }
            return std::nullopt;
        });
    }
    return results;
}

}  // namespace ktri
