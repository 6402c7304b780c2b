#pragma once

// The direct bijection from 2-triangulations of the n-gon to dominating
// pairs of Dyck paths of semilength n-4, by coloring the crosses of the
// staircase diagram, and the reference map obtained by matching labels in
// the two generating trees.

#include <map>
#include <vector>

#include "ktri/dyck.hpp"
#include "ktri/gentree2.hpp"
#include "ktri/polygon.hpp"

namespace ktri {

enum class CrossColor { uncolored, blue, red };

/// Contiguous column ranges; block j (1-based) has j-1 blocks to its left.
class BlockState {
public:
    struct Block {
        int first_column;
        int last_column;
    };

    /// n-3 singleton blocks: block j holds column j+3.
    explicit BlockState(int n);

    int count() const { return static_cast<int>(blocks_.size()); }
    const Block& block(int j) const { return blocks_.at(static_cast<std::size_t>(j - 1)); }
    bool contains(int j, int column) const {
        const Block& b = block(j);
        return b.first_column <= column && column <= b.last_column;
    }

    /// Merges blocks j and j+1. j = 0 removes block 1 instead.
    void merge_with_next(int j);

private:
    std::vector<Block> blocks_;
};

enum class TieBreak {
    lowest_blue_highest_red,   // the fixed rule
    highest_blue_lowest_red,   // the opposite choice, for the independence check
};

struct ColoringStep {
    int iteration = 0;  // 1-based
    int r = 0;
    Diagonal blue;
    Diagonal red;
    int merged_left = 0;   // block indices merged (r-2, r-1)
    int merged_right = 0;
};

struct ColoredDiagram {
    KTriangulation diagram;
    std::map<Diagonal, CrossColor> color;
    BlockState blocks;
    std::vector<ColoringStep> steps;

    /// Blue (resp. red) crosses in column j.
    int alpha(int column) const;
    int beta(int column) const;
};

/// Runs the blue/red coloring n-5 times. Throws StructuralError if a
/// required uncolored cross is missing.
ColoredDiagram color_diagram(const KTriangulation& t, TieBreak tie = TieBreak::lowest_blue_highest_red);

/// P = N E^{alpha_5} ... N E^{alpha_n} E,  Q = N E^{beta_4} ... N E^{beta_{n-1}} E.
PathPair psi(const KTriangulation& t);
PathPair psi_from_coloring(const ColoredDiagram& colored);

/// Labels of the nodes from `t` up to the root, root last.
std::vector<TreeLabel> ancestor_labels(const KTriangulation& t);
std::vector<TreeLabel> ancestor_labels(const PairEncoding& e);

/// Reference map: climb the triangulation tree, descend the pair tree by
/// matching labels.
PathPair psi_tree(const KTriangulation& t);

/// Inverse through the trees. Throws DomainError unless upper dominates lower.
KTriangulation psi_inverse(const DyckPath& upper, const DyckPath& lower);

}  // namespace ktri
