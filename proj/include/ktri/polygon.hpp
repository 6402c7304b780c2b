#pragma once

// Polygon context, diagonal sets and the staircase representation of
// k-triangulations.
//
// Vertices of the convex n-gon are labeled 1..n clockwise. A nontrivial
// diagonal (a,b), a < b, is a cell of the staircase
//
//     Lambda_n^(k) = { (a,b) : 1 <= a < b-k <= n-k,  a > b-n+k }
//
// whose columns run k+2..n and rows 1..n-k-1. A k-triangulation is stored as
// the set of its nontrivial diagonals only; trivial diagonals (a, a+j),
// 2 <= j <= k, are implied.

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "ktri/limits.hpp"

namespace ktri {

struct Diagonal {
    int a = 0;
    int b = 0;

    /// Canonical form of the chord between x and y (smaller label first).
    static Diagonal between(int x, int y) { return x < y ? Diagonal{x, y} : Diagonal{y, x}; }

    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Interior intersection of two chords of a convex polygon.
inline bool crosses(Diagonal x, Diagonal y) {
    return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

class PolygonContext {
public:
    /// Requires k >= 1 and n > 2k.
    PolygonContext(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }

    /// k(n-2k-1): the number of nontrivial diagonals of every k-triangulation.
    int diagonal_count() const { return k_ * (n_ - 2 * k_ - 1); }

    bool is_cell(Diagonal d) const {
        return 1 <= d.a && d.a < d.b - k_ && d.b - k_ <= n_ - k_ && d.a > d.b - n_ + k_;
    }

    /// True for (a, a+j) with 2 <= j <= k, including the wrapped forms.
    bool is_trivial(Diagonal d) const;

    friend auto operator<=>(const PolygonContext&, const PolygonContext&) = default;

private:
    int n_;
    int k_;
};

/// Sorted, duplicate-free set of staircase cells with its polygon context.
class DiagonalSet {
public:
    explicit DiagonalSet(PolygonContext ctx) : ctx_(ctx) {}

    /// Throws DomainError on non-cells or duplicates.
    DiagonalSet(PolygonContext ctx, std::vector<Diagonal> diagonals);

    const PolygonContext& context() const { return ctx_; }
    std::span<const Diagonal> diagonals() const { return diagonals_; }
    std::size_t size() const { return diagonals_.size(); }
    bool empty() const { return diagonals_.empty(); }
    bool contains(Diagonal d) const;

    auto begin() const { return diagonals_.begin(); }
    auto end() const { return diagonals_.end(); }

    DiagonalSet with(Diagonal d) const;
    DiagonalSet without(Diagonal d) const;

    friend bool operator==(const DiagonalSet&, const DiagonalSet&) = default;
    friend std::strong_ordering operator<=>(const DiagonalSet& x, const DiagonalSet& y);

private:
    PolygonContext ctx_;
    std::vector<Diagonal> diagonals_;
};

/// A diagonal set certified maximal without (k+1)-crossings.
class KTriangulation {
public:
    /// Throws DomainError unless is_k_triangulation(set).
    static KTriangulation certify(DiagonalSet set);

    /// The root of the generating tree: the empty (2k+1)-gon.
    static KTriangulation empty_polygon(int k);

    const DiagonalSet& diagonals() const { return base_; }
    const PolygonContext& context() const { return base_.context(); }
    int n() const { return base_.context().n(); }
    int k() const { return base_.context().k(); }
    bool contains(Diagonal d) const { return base_.contains(d); }
    std::size_t size() const { return base_.size(); }

    friend bool operator==(const KTriangulation&, const KTriangulation&) = default;
    friend auto operator<=>(const KTriangulation& x, const KTriangulation& y) { return x.base_ <=> y.base_; }

private:
    explicit KTriangulation(DiagonalSet base) : base_(std::move(base)) {}
    DiagonalSet base_;
};

/// All trivial diagonals in canonical form, sorted; n(k-1) of them.
std::vector<Diagonal> trivial_diagonals(const PolygonContext& ctx);

/// Cells of Lambda_n^(k) ordered by column b, then row a.
std::vector<Diagonal> lambda_cells(const PolygonContext& ctx);

/// Sorted-endpoint criterion: after sorting, a_1<...<a_t<b_1<...<b_t.
bool is_t_crossing(std::span<const Diagonal> diagonals);

/// Whether some t of the diagonals mutually cross.
bool has_crossing(std::span<const Diagonal> diagonals, int t);
bool has_crossing(const DiagonalSet& set, int t);

/// Whether `set` together with `d` contains a t-crossing through `d`.
bool creates_crossing(const DiagonalSet& set, Diagonal d, int t);

bool is_k_triangulation(const DiagonalSet& set);

/// Greedy completion in lambda_cells order. Throws DomainError if `set`
/// already contains a (k+1)-crossing.
KTriangulation complete_to_maximal(const DiagonalSet& set);

/// Every k-triangulation of the context, by backtracking over lambda_cells
/// with maximality verified at the leaves. Sorted lexicographically.
std::vector<KTriangulation> enumerate_brute(const PolygonContext& ctx,
                                            const EnumerationLimits& limits = {});

/// Number of nontrivial diagonals incident to `vertex`.
int degree(const DiagonalSet& set, int vertex);

}  // namespace ktri
