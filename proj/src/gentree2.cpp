#include "ktri/gentree2.hpp"

#include <algorithm>
#include <set>

#include "ktri/errors.hpp"

namespace ktri {

std::string TreeLabel::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(d[i]);
    }
    return out + ")";
}

std::string to_string(PairRule rule) {
    switch (rule) {
        case PairRule::ch1: return "ch1";
        case PairRule::ch2: return "ch2";
        case PairRule::ch3: return "ch3";
    }
    return "?";
}

namespace {

void require_k2(const KTriangulation& t) {
    if (t.k() != 2) throw DomainError("operation is defined for 2-triangulations only");
}

std::vector<int> rows_in_column(const KTriangulation& t, int column) {
    std::vector<int> rows;
    for (Diagonal d : t.diagonals()) {
        if (d.b == column) rows.push_back(d.a);
    }
    return rows;
}

}  // namespace

int column_count(const KTriangulation& t, int column) {
    return static_cast<int>(std::count_if(t.diagonals().begin(), t.diagonals().end(),
                                          [column](Diagonal d) { return d.b == column; }));
}

int corner(const KTriangulation& t) {
    require_k2(t);
    if (t.n() == 5) return 2;
    int r = 0;
    for (Diagonal d : t.diagonals()) {
        if (d.b == d.a + 3) r = std::max(r, d.a);
    }
    KTRI_CHECK(r >= 2, "2-triangulation without a short diagonal beyond vertex 1");
    return r;
}

KTriangulation parent2(const KTriangulation& t) {
    require_k2(t);
    const int n = t.n();
    if (n < 6) throw DomainError("the pentagon is the root and has no parent");
    const int r = corner(t);

    std::vector<Diagonal> kept;
    bool partner_cross = false;
    for (Diagonal d : t.diagonals()) {
        KTRI_CHECK(d.a <= r, "cross below the corner row");
        if (d.b == d.a + 3 && d.a >= r - 1) {
            KTRI_CHECK(d.a == r || d.a == r - 1, "unexpected short diagonal right of the corner");
            partner_cross = partner_cross || d.a == r - 1;
            continue;
        }
        kept.push_back(d);
    }
    if (partner_cross) KTRI_CHECK(column_count(t, r + 1) == 0, "(r-1,r+2) present with column r+1 nonempty");

    // Merge columns r+1 and r+2; later columns shift left.
    const PolygonContext smaller(n - 1, 2);
    std::set<Diagonal> merged;
    for (Diagonal d : kept) {
        const int b = d.b == r + 2 ? r + 1 : (d.b > r + 2 ? d.b - 1 : d.b);
        if (smaller.is_cell({d.a, b})) merged.insert({d.a, b});
    }
    KTRI_CHECK(static_cast<int>(merged.size()) == smaller.diagonal_count(),
               "parent does not have exactly 2 fewer diagonals");
    return KTriangulation::certify(DiagonalSet(smaller, {merged.begin(), merged.end()}));
}

std::vector<TriangulationChild> children2(const KTriangulation& t) {
    require_k2(t);
    const int n = t.n();
    const int r = corner(t);
    const PolygonContext larger(n + 1, 2);
    std::vector<TriangulationChild> out;

    for (int u = r; u <= n - 2; ++u) {
        std::vector<int> split = rows_in_column(t, u + 1);
        std::sort(split.rbegin(), split.rend());  // a_1 > ... > a_h
        const int h = static_cast<int>(split.size());

        std::vector<Diagonal> base;
        for (Diagonal d : t.diagonals()) {
            if (d.b >= u + 2) {
                base.push_back({d.a, d.b + 1});
            } else if (d.b != u + 1) {
                base.push_back(d);
            }
        }
        base.push_back({u, u + 3});

        const int last_choice = u == n - 2 ? h + 1 : h;
        for (int i = 0; i <= last_choice; ++i) {
            std::vector<Diagonal> ds = base;
            if (i == h + 1) {
                for (int a : split) ds.push_back({a, u + 1});
                ds.push_back({1, u + 1});
            } else {
                for (int x = 0; x < i; ++x) ds.push_back({split[x], u + 1});
                ds.push_back(i > 0 ? Diagonal{split[i - 1], u + 2} : Diagonal{u - 1, u + 2});
                for (int x = i; x < h; ++x) ds.push_back({split[x], u + 2});
            }
            KTriangulation child = KTriangulation::certify(DiagonalSet(larger, std::move(ds)));
            KTRI_CHECK(parent2(child) == t, "child does not map back to its parent");
            out.push_back({{u, i}, std::move(child)});
        }
    }
    return out;
}

TreeLabel label2(const KTriangulation& t) {
    const int r = corner(t);
    TreeLabel out;
    for (int j = r + 1; j <= t.n() - 1; ++j) out.d.push_back(column_count(t, j));
    return out;
}

std::vector<TreeLabel> label_children(const TreeLabel& label) {
    const auto& d = label.d;
    if (d.empty()) throw DomainError("empty label");
    const std::size_t s = d.size();
    std::vector<TreeLabel> out;
    for (std::size_t j = 0; j + 1 < s; ++j) {
        for (int i = 0; i <= d[j]; ++i) {
            TreeLabel child{{i, d[j] - i + 1, d[j + 1] + 1}};
            child.d.insert(child.d.end(), d.begin() + static_cast<std::ptrdiff_t>(j) + 2, d.end());
            out.push_back(std::move(child));
        }
    }
    for (int i = 0; i <= d[s - 1] + 1; ++i) out.push_back({{i, d[s - 1] - i + 1}});
    return out;
}

PairEncoding pair_parent(const PairEncoding& e) {
    const int m = e.semilength();
    if (m < 2) throw DomainError("the root pair (NE,NE) has no parent");
    const int s = s_param(e);
    ExponentForm p{std::vector<int>(static_cast<std::size_t>(m), 0)};
    ExponentForm q{std::vector<int>(static_cast<std::size_t>(m), 0)};
    for (int j = 1; j <= m - 1; ++j) {
        const auto idx = static_cast<std::size_t>(j);
        if (j <= s - 2) {
            p.p[idx] = e.p(j);
            q.p[idx] = e.q(j);
        } else if (j == s - 1) {
            p.p[idx] = e.p(j) - 1;
            q.p[idx] = e.q(s) + e.q(s - 1) - 1;
        } else if (j == s) {
            p.p[idx] = e.p(s + 1) + e.p(s);
            q.p[idx] = e.q(j + 1);
        } else {
            p.p[idx] = e.p(j + 1);
            q.p[idx] = e.q(j + 1);
        }
    }
    return PairEncoding(std::move(p), std::move(q));
}

std::vector<PairChild> pair_children(const PairEncoding& e) {
    const int m = e.semilength();
    const int s = s_param(e);
    std::vector<PairChild> out;

    for (int t = 1; t <= s; ++t) {
        // Split column (p_{t+1}; q_t) into top entries (top_t1, top_t2) at
        // positions t+1, t+2 and bottom entries (bottom_t, bottom_t1) at t, t+1.
        auto make = [&](int top_t1, int top_t2, int bottom_t, int bottom_t1) {
            ExponentForm p{std::vector<int>(static_cast<std::size_t>(m) + 2, 0)};
            ExponentForm q{std::vector<int>(static_cast<std::size_t>(m) + 2, 0)};
            for (int j = 1; j <= m + 1; ++j) {
                const auto idx = static_cast<std::size_t>(j);
                if (j < t) {
                    p.p[idx] = e.p(j);
                    q.p[idx] = e.q(j);
                } else if (j == t) {
                    p.p[idx] = e.p(t) + 1;
                    q.p[idx] = bottom_t;
                } else if (j == t + 1) {
                    p.p[idx] = top_t1;
                    q.p[idx] = bottom_t1;
                } else if (j == t + 2) {
                    p.p[idx] = top_t2;
                    q.p[idx] = e.q(j - 1);
                } else {
                    p.p[idx] = e.p(j - 1);
                    q.p[idx] = e.q(j - 1);
                }
            }
            return PairEncoding(std::move(p), std::move(q));
        };
        auto emit = [&](ChildChoicePair choice, PairEncoding child) {
            KTRI_CHECK(s_param(child) == t + 1, "child generated with t must have s = t+1");
            KTRI_CHECK(pair_parent(child) == e, "child pair does not map back to its parent");
            out.push_back({choice, std::move(child)});
        };

        for (int i = 1; i <= e.p(t + 1); ++i) {
            emit({t, PairRule::ch1, i}, make(i, e.p(t + 1) - i, e.q(t) + 1, 0));
        }
        emit({t, PairRule::ch2, 0}, make(0, e.p(t + 1), e.q(t) + 1, 0));
        const int last_j = t == 1 ? e.q(t) + 1 : e.q(t);
        for (int j = 1; j <= last_j; ++j) {
            emit({t, PairRule::ch3, j}, make(0, e.p(t + 1), e.q(t) - j + 1, j));
        }
    }
    return out;
}

TreeLabel pair_label(const PairEncoding& e) {
    const int s = s_param(e);
    TreeLabel out;
    for (int j = s; j >= 1; --j) out.d.push_back(e.p(j + 1) + e.q(j));
    return out;
}

}  // namespace ktri
