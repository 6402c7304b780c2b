#pragma once

// The two isomorphic generating trees for 2-triangulations and for pairs of
// non-crossing Dyck paths, and the succession rule on their labels.
//
// Level l of the triangulation tree holds the 2-triangulations of the
// (l+5)-gon; level l of the pair tree holds the dominating pairs of
// semilength l+1. Both roots carry the label (0,0).

#include <string>
#include <vector>

#include "ktri/dyck.hpp"
#include "ktri/polygon.hpp"

namespace ktri {

struct TreeLabel {
    std::vector<int> d;

    std::size_t size() const { return d.size(); }
    std::string str() const;  // "(d1,d2,...)"

    friend auto operator<=>(const TreeLabel&, const TreeLabel&) = default;
};

/// Child selector in the triangulation tree: split column u+1 at i.
struct ChildChoice2T {
    int u = 0;
    int i = 0;

    friend auto operator<=>(const ChildChoice2T&, const ChildChoice2T&) = default;
};

enum class PairRule { ch1, ch2, ch3 };

/// Child selector in the pair tree. `index` is i for ch1, 0 for ch2, j for ch3.
struct ChildChoicePair {
    int t = 0;
    PairRule rule = PairRule::ch2;
    int index = 0;

    friend auto operator<=>(const ChildChoicePair&, const ChildChoicePair&) = default;
};

std::string to_string(PairRule rule);

struct TriangulationChild {
    ChildChoice2T choice;
    KTriangulation child;
};

struct PairChild {
    ChildChoicePair choice;
    PairEncoding child;
};

/// Largest r with (r, r+3) in T; 2 for the empty pentagon.
int corner(const KTriangulation& t);

/// Delete the corner square (and its partner), then merge columns r+1, r+2.
/// Throws DomainError for the pentagon.
KTriangulation parent2(const KTriangulation& t);

/// All children, ordered by (u, i). Each is certified and round-trip checked.
std::vector<TriangulationChild> children2(const KTriangulation& t);

/// (h_{r+1}, ..., h_{n-1}): crosses per column right of the corner.
TreeLabel label2(const KTriangulation& t);

/// Number of crosses in column j (0 outside the staircase).
int column_count(const KTriangulation& t, int column);

/// The succession rule
///   (d_1..d_s) -> (i, d_j-i+1, d_{j+1}+1, d_{j+2}..d_s)  1 <= j < s, 0 <= i <= d_j
///              -> (i, d_s-i+1)                           0 <= i <= d_s+1
/// in that order.
std::vector<TreeLabel> label_children(const TreeLabel& label);

/// Merge the pair's columns around s. Throws DomainError at the root.
PairEncoding pair_parent(const PairEncoding& e);

/// Children by rules ch1/ch2/ch3 over t = 1..s, ordered (t, rule, index).
std::vector<PairChild> pair_children(const PairEncoding& e);

/// (p_{s+1}+q_s, p_s+q_{s-1}, ..., p_2+q_1).
TreeLabel pair_label(const PairEncoding& e);

}  // namespace ktri
