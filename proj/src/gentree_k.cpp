#include "ktri/gentree_k.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "ktri/dyck.hpp"
#include "ktri/errors.hpp"

namespace ktri {

namespace {

using Columns = std::map<int, std::set<int>>;  // column -> rows holding a cross

Columns to_columns(const KTriangulation& t) {
    Columns out;
    for (Diagonal d : t.diagonals()) out[d.b].insert(d.a);
    return out;
}

std::vector<Diagonal> to_diagonals(const Columns& columns) {
    std::vector<Diagonal> out;
    for (const auto& [b, rows] : columns) {
        for (int a : rows) out.push_back({a, b});
    }
    return out;
}

void require_nonroot(const KTriangulation& t) {
    if (t.k() < 2) throw DomainError("the k-triangulation tree needs k >= 2");
    if (t.n() < 2 * t.k() + 2) throw DomainError("the empty (2k+1)-gon is the root");
}

}  // namespace

int corner_k(const KTriangulation& t) {
    require_nonroot(t);
    const int k = t.k();
    int r = 0;
    for (Diagonal d : t.diagonals()) {
        if (d.b == d.a + k + 1) r = std::max(r, d.a);
    }
    KTRI_CHECK(r >= k, "corner below k");
    for (Diagonal d : t.diagonals()) KTRI_CHECK(d.a <= r, "cross below the corner row");
    return r;
}

std::vector<int> a_sequence(const KTriangulation& t) {
    const int r = corner_k(t);
    const int k = t.k();
    std::vector<int> a;
    int previous = 0;
    for (int i = 1; i <= k - 1; ++i) {
        int selector = r + i - k;
        for (Diagonal d : t.diagonals()) {
            if (d.b == r + i && d.a > previous) selector = std::min(selector, d.a);
        }
        KTRI_CHECK(selector > previous, "selectors a_i are not increasing");
        const Diagonal next{selector, r + i + 1};
        KTRI_CHECK(t.contains(next) || t.context().is_trivial(next),
                   "selector lemma fails at a_" + std::to_string(i));
        a.push_back(selector);
        previous = selector;
    }
    for (Diagonal d : t.diagonals()) {
        KTRI_CHECK(!(d.b == r + k && d.a > previous), "column r+k has a cross below row a_{k-1}");
    }
    return a;
}

KTreeFrame tree_frame(const KTriangulation& t) { return {corner_k(t), a_sequence(t)}; }

KTriangulation parent_k(const KTriangulation& t) {
    require_nonroot(t);
    const int n = t.n();
    const int k = t.k();
    const KTreeFrame frame = tree_frame(t);
    const int r = frame.r;
    Columns columns = to_columns(t);

    // Only (r, r+k+1) among the short squares right of the corner holds a cross.
    for (int a = r; a <= n - k - 1; ++a) {
        auto it = columns.find(a + k + 1);
        if (it == columns.end() || it->second.erase(a) == 0) continue;
        KTRI_CHECK(a == r, "cross on a short square right of the corner");
    }

    for (int i = 1; i <= k - 1; ++i) {
        const int selector = frame.a[static_cast<std::size_t>(i - 1)];
        std::set<int>& keep = columns[r + i];
        std::set<int>& source = columns[r + i + 1];
        KTRI_CHECK(keep.empty() || *keep.begin() >= selector, "cross above a_i left in column r+i");
        while (!source.empty() && *source.begin() < selector) {
            keep.insert(*source.begin());
            source.erase(source.begin());
        }
        source.erase(selector);
    }

    KTRI_CHECK(columns[r + k].empty(), "column r+k is not empty before deletion");
    const PolygonContext smaller(n - 1, k);
    std::vector<Diagonal> kept;
    for (const auto& [b, rows] : columns) {
        if (b == r + k) continue;
        const int shifted = b > r + k ? b - 1 : b;
        for (int a : rows) {
            const Diagonal d{a, shifted};
            if (smaller.is_cell(d)) {
                kept.push_back(d);
            } else {
                // Boundary squares (a, n-k-1+a) drop out when r > n-2k.
                KTRI_CHECK(r > n - 2 * k && shifted == n - k - 1 + a, "cross fell outside the smaller staircase");
            }
        }
    }
    KTRI_CHECK(static_cast<int>(kept.size()) == smaller.diagonal_count(),
               "parent does not have exactly k fewer diagonals");
    return KTriangulation::certify(DiagonalSet(smaller, std::move(kept)));
}

std::vector<KChild> children_k(const KTriangulation& t) {
    const int n = t.n();
    const int k = t.k();
    if (k < 2) throw DomainError("the k-triangulation tree needs k >= 2");
    const bool root = n == 2 * k + 1;
    const int r = root ? k : corner_k(t);
    const PolygonContext larger(n + 1, k);
    std::vector<KChild> out;

    for (int u = r; u <= n - k; ++u) {
        Columns base;
        for (Diagonal d : t.diagonals()) base[d.b >= u + k ? d.b + 1 : d.b].insert(d.a);
        base[u + k + 1].insert(u);

        std::vector<std::vector<int>> choices(static_cast<std::size_t>(k - 1));
        for (int i = 1; i <= k - 1; ++i) {
            std::set<int> bi{u + i - k};
            for (Diagonal d : t.diagonals()) {
                if (d.b == u + i) bi.insert(d.a);
            }
            if (u == n - k) bi.insert(i);
            choices[static_cast<std::size_t>(i - 1)].assign(bi.begin(), bi.end());
        }

        std::vector<int> picked;
        auto build = [&]() {
            Columns columns = base;
            for (int i = k - 1; i >= 1; --i) {
                const int b = picked[static_cast<std::size_t>(i - 1)];
                // The extra element i of B_i sits on the boundary: (i, u+i+1)
                // would be trivial in the (n+1)-gon.
                if (u == n - k && b == i) {
                    columns[u + i].insert(b);
                } else {
                    columns[u + i + 1].insert(b);
                }
                std::set<int>& from = columns[u + i];
                std::set<int>& to = columns[u + i + 1];
                while (!from.empty() && *from.begin() < b) {
                    to.insert(*from.begin());
                    from.erase(from.begin());
                }
            }
            KTriangulation child = KTriangulation::certify(DiagonalSet(larger, to_diagonals(columns)));
            KTRI_CHECK(parent_k(child) == t, "child does not map back to its parent");
            out.push_back({{u, picked}, std::move(child)});
        };
        auto select = [&](auto& self, std::size_t i) -> void {
            if (i == choices.size()) {
                build();
                return;
            }
            for (int b : choices[i]) {
                if (!picked.empty() && b <= picked.back()) continue;
                picked.push_back(b);
                self(self, i + 1);
                picked.pop_back();
            }
        };
        select(select, 0);
    }
    return out;
}

namespace {

void check_tree_request(int n, int k, const EnumerationLimits& limits) {
    if (k < 2) throw DomainError("the k-triangulation tree needs k >= 2");
    if (n < 2 * k + 1) throw DomainError("enumerate_tree requires n >= 2k+1");
    const BigInt expected = jonsson_count(n, k);
    if (expected > limits.max_tree_count) {
        throw DomainError("enumerate_tree guard: " + expected.str() + " triangulations exceed " +
                          std::to_string(limits.max_tree_count));
    }
}

template <typename Visit>
void walk(const KTriangulation& node, int target_n, Visit& visit) {
    if (node.n() == target_n) {
        visit(node);
        return;
    }
    for (const KChild& c : children_k(node)) walk(c.child, target_n, visit);
}

}  // namespace

std::vector<KTriangulation> enumerate_tree(int n, int k, const EnumerationLimits& limits) {
    check_tree_request(n, k, limits);
    std::vector<KTriangulation> out;
    auto visit = [&out](const KTriangulation& t) { out.push_back(t); };
    walk(KTriangulation::empty_polygon(k), n, visit);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_tree(int n, int k, const EnumerationLimits& limits) {
    check_tree_request(n, k, limits);
    std::uint64_t count = 0;
    auto visit = [&count](const KTriangulation&) { ++count; };
    walk(KTriangulation::empty_polygon(k), n, visit);
    return count;
}

}  // namespace ktri
