#pragma once

// Generating tree for k-triangulations, k >= 2. Level l holds the
// k-triangulations of the (l+2k+1)-gon; the root is the empty (2k+1)-gon.

#include <cstdint>
#include <vector>

#include "ktri/limits.hpp"
#include "ktri/polygon.hpp"

namespace ktri {

/// Corner r and the greedy selectors a_1 < ... < a_{k-1} where
/// a_i = min{ a in A_i : a > a_{i-1} },  A_i = {a : (a, r+i) in T} u {r+i-k}.
struct KTreeFrame {
    int r = 0;
    std::vector<int> a;
};

/// u in r..n-k and b_1 < ... < b_{k-1}, b_i in B_i.
struct ChildChoiceK {
    int u = 0;
    std::vector<int> b;

    friend auto operator<=>(const ChildChoiceK&, const ChildChoiceK&) = default;
};

struct KChild {
    ChildChoiceK choice;
    KTriangulation child;
};

/// Largest r with (r, r+k+1) in T. Requires n >= 2k+2.
int corner_k(const KTriangulation& t);

/// Requires n >= 2k+2. Asserts the selector lemma and that column r+k has
/// no cross below row a_{k-1}.
std::vector<int> a_sequence(const KTriangulation& t);

KTreeFrame tree_frame(const KTriangulation& t);

/// Throws DomainError at the root (n = 2k+1).
KTriangulation parent_k(const KTriangulation& t);

/// Children ordered by (u, b). Each is certified and maps back under parent_k.
std::vector<KChild> children_k(const KTriangulation& t);

/// Depth-first generation from the root down to level n-2k-1, returned in
/// sorted order. Guarded on jonsson_count(n, k).
std::vector<KTriangulation> enumerate_tree(int n, int k, const EnumerationLimits& limits = {});

/// Number of nodes at the level of the n-gon, counted without storing them.
std::uint64_t count_tree(int n, int k, const EnumerationLimits& limits = {});

}  // namespace ktri
