#include "ktri/bijection.hpp"

#include <algorithm>
#include <string>

#include "ktri/errors.hpp"

namespace ktri {

BlockState::BlockState(int n) {
    for (int column = 4; column <= n; ++column) blocks_.push_back({column, column});
}

void BlockState::merge_with_next(int j) {
    KTRI_CHECK(j >= 0 && j < count(), "merge outside the block range");
    if (j == 0) {
        blocks_.erase(blocks_.begin());
        return;
    }
    auto left = blocks_.begin() + (j - 1);
    left->last_column = std::next(left)->last_column;
    blocks_.erase(std::next(left));
}

int ColoredDiagram::alpha(int column) const {
    return static_cast<int>(std::count_if(color.begin(), color.end(), [column](const auto& kv) {
        return kv.first.b == column && kv.second == CrossColor::blue;
    }));
}

int ColoredDiagram::beta(int column) const {
    return static_cast<int>(std::count_if(color.begin(), color.end(), [column](const auto& kv) {
        return kv.first.b == column && kv.second == CrossColor::red;
    }));
}

namespace {

// Uncolored cross in [first, last] with extreme column; ties by row.
const Diagonal* pick(const std::map<Diagonal, CrossColor>& color, int first, int last, bool leftmost,
                     bool lowest) {
    const Diagonal* best = nullptr;
    for (const auto& [d, c] : color) {
        if (c != CrossColor::uncolored || d.b < first || d.b > last) continue;
        if (best == nullptr) {
            best = &d;
            continue;
        }
        const bool better_column = leftmost ? d.b < best->b : d.b > best->b;
        const bool better_row = lowest ? d.a > best->a : d.a < best->a;
        if (better_column || (d.b == best->b && better_row)) best = &d;
    }
    return best;
}

}  // namespace

ColoredDiagram color_diagram(const KTriangulation& t, TieBreak tie) {
    if (t.k() != 2) throw DomainError("the coloring bijection is defined for 2-triangulations");
    const int n = t.n();
    ColoredDiagram out{t, {}, BlockState(n), {}};
    for (Diagonal d : t.diagonals()) out.color[d] = CrossColor::uncolored;
    const bool fixed_rule = tie == TieBreak::lowest_blue_highest_red;

    for (int iteration = 1; iteration <= n - 5; ++iteration) {
        // Largest r with a cross of row r in block r; the pattern of all
        // crosses, colored or not, is the current ancestor's diagram.
        int r = 0;
        for (int j = out.blocks.count(); j >= 1 && r == 0; --j) {
            for (Diagonal d : t.diagonals()) {
                if (d.a == j && out.blocks.contains(j, d.b)) {
                    r = j;
                    break;
                }
            }
        }
        KTRI_CHECK(r >= 2, "coloring step found no corner >= 2");

        const BlockState::Block corner_block = out.blocks.block(r);
        const Diagonal* blue = pick(out.color, corner_block.first_column, corner_block.last_column, true, fixed_rule);
        KTRI_CHECK(blue != nullptr, "no uncolored cross to color blue in block " + std::to_string(r));
        const Diagonal blue_cross = *blue;
        out.color[blue_cross] = CrossColor::blue;

        BlockState::Block merged{};
        if (r == 2) {
            merged = out.blocks.block(1);
        } else {
            merged = {out.blocks.block(r - 2).first_column, out.blocks.block(r - 1).last_column};
        }
        out.blocks.merge_with_next(r - 2);

        const Diagonal* red = pick(out.color, merged.first_column, merged.last_column, false, !fixed_rule);
        KTRI_CHECK(red != nullptr, "no uncolored cross to color red in the merged block");
        const Diagonal red_cross = *red;
        out.color[red_cross] = CrossColor::red;

        out.steps.push_back({iteration, r, blue_cross, red_cross, r - 2, r - 1});
    }
    for (const auto& [d, c] : out.color) {
        KTRI_CHECK(c != CrossColor::uncolored, "cross left uncolored after n-5 iterations");
    }
    return out;
}

PathPair psi_from_coloring(const ColoredDiagram& colored) {
    const int n = colored.diagram.n();
    std::string upper;
    std::string lower;
    for (int j = 5; j <= n; ++j) {
        upper += 'N';
        upper.append(static_cast<std::size_t>(colored.alpha(j)), 'E');
    }
    upper += 'E';
    for (int j = 4; j <= n - 1; ++j) {
        lower += 'N';
        lower.append(static_cast<std::size_t>(colored.beta(j)), 'E');
    }
    lower += 'E';
    PathPair out{DyckPath::parse(upper), DyckPath::parse(lower)};
    KTRI_CHECK(dominates(out.upper, out.lower), "coloring produced a crossing pair");
    return out;
}

PathPair psi(const KTriangulation& t) { return psi_from_coloring(color_diagram(t)); }

std::vector<TreeLabel> ancestor_labels(const KTriangulation& t) {
    std::vector<TreeLabel> labels{label2(t)};
    KTriangulation current = t;
    while (current.n() > 5) {
        current = parent2(current);
        labels.push_back(label2(current));
    }
    return labels;
}

std::vector<TreeLabel> ancestor_labels(const PairEncoding& e) {
    std::vector<TreeLabel> labels{pair_label(e)};
    PairEncoding current = e;
    while (current.semilength() > 1) {
        current = pair_parent(current);
        labels.push_back(pair_label(current));
    }
    return labels;
}

namespace {

template <typename Node, typename Children, typename Label>
Node descend(Node node, const std::vector<TreeLabel>& labels, Children children_of, Label label_of) {
    // labels.back() is the root's; walk the rest from the root downward.
    for (auto it = std::next(labels.rbegin()); it != labels.rend(); ++it) {
        std::optional<Node> next;
        for (auto& child : children_of(node)) {
            if (label_of(child.child) == *it) {
                KTRI_CHECK(!next, "sibling labels are not distinct");
                next = child.child;
            }
        }
        KTRI_CHECK(next.has_value(), "no child carries label " + it->str());
        node = *next;
    }
    return node;
}

}  // namespace

PathPair psi_tree(const KTriangulation& t) {
    const auto labels = ancestor_labels(t);
    return descend(PairEncoding::root(), labels, pair_children, pair_label).paths();
}

KTriangulation psi_inverse(const DyckPath& upper, const DyckPath& lower) {
    if (upper.semilength() != lower.semilength() || !dominates(upper, lower)) {
        throw DomainError("pair is not non-crossing: " + upper.steps() + " goes below " + lower.steps());
    }
    const auto labels = ancestor_labels(PairEncoding::from_paths(upper, lower));
    return descend(KTriangulation::empty_polygon(2), labels, children2, label2);
}

}  // namespace ktri
