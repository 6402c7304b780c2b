#include "ktri/polygon.hpp"

#include <algorithm>
#include <string>

#include "ktri/errors.hpp"

namespace ktri {

namespace detail {
void structural_failure(const std::string& what) { throw StructuralError(what); }
}  // namespace detail

PolygonContext::PolygonContext(int n, int k) : n_(n), k_(k) {
    if (k < 1 || n <= 2 * k) {
        throw DomainError("polygon context requires k >= 1 and n > 2k (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
    }
}

bool PolygonContext::is_trivial(Diagonal d) const {
    const int forward = d.b - d.a;
    const int wrapped = d.a + n_ - d.b;
    return (forward >= 2 && forward <= k_) || (wrapped >= 2 && wrapped <= k_);
}

DiagonalSet::DiagonalSet(PolygonContext ctx, std::vector<Diagonal> diagonals)
    : ctx_(ctx), diagonals_(std::move(diagonals)) {
    std::sort(diagonals_.begin(), diagonals_.end());
    for (std::size_t i = 0; i < diagonals_.size(); ++i) {
        const Diagonal d = diagonals_[i];
        if (!ctx_.is_cell(d)) {
            throw DomainError("(" + std::to_string(d.a) + "," + std::to_string(d.b) +
                              ") is not a nontrivial diagonal of the " + std::to_string(ctx_.n()) +
                              "-gon for k=" + std::to_string(ctx_.k()));
        }
        if (i > 0 && diagonals_[i - 1] == d) {
            throw DomainError("duplicate diagonal (" + std::to_string(d.a) + "," +
                              std::to_string(d.b) + ")");
        }
    }
}

bool DiagonalSet::contains(Diagonal d) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

DiagonalSet DiagonalSet::with(Diagonal d) const {
    std::vector<Diagonal> next = diagonals_;
    next.push_back(d);
    return DiagonalSet(ctx_, std::move(next));
}

DiagonalSet DiagonalSet::without(Diagonal d) const {
    DiagonalSet out(ctx_);
    out.diagonals_.reserve(diagonals_.size());
    std::copy_if(diagonals_.begin(), diagonals_.end(), std::back_inserter(out.diagonals_),
                 [d](Diagonal x) { return x != d; });
    return out;
}

std::strong_ordering operator<=>(const DiagonalSet& x, const DiagonalSet& y) {
    if (auto c = x.ctx_ <=> y.ctx_; c != 0) return c;
    return std::lexicographical_compare_three_way(x.diagonals_.begin(), x.diagonals_.end(),
                                                  y.diagonals_.begin(), y.diagonals_.end());
}

KTriangulation KTriangulation::certify(DiagonalSet set) {
    if (!is_k_triangulation(set)) {
        throw DomainError("diagonal set is not a " + std::to_string(set.context().k()) +
                          "-triangulation of the " + std::to_string(set.context().n()) + "-gon");
    }
    return KTriangulation(std::move(set));
}

KTriangulation KTriangulation::empty_polygon(int k) {
    return KTriangulation(DiagonalSet(PolygonContext(2 * k + 1, k)));
}

std::vector<Diagonal> trivial_diagonals(const PolygonContext& ctx) {
    const int n = ctx.n();
    std::vector<Diagonal> out;
    for (int j = 2; j <= ctx.k(); ++j) {
        for (int a = 1; a <= n; ++a) {
            out.push_back(a + j > n ? Diagonal{a + j - n, a} : Diagonal{a, a + j});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Diagonal> lambda_cells(const PolygonContext& ctx) {
    std::vector<Diagonal> out;
    for (int b = ctx.k() + 2; b <= ctx.n(); ++b) {
        for (int a = 1; a <= ctx.n() - ctx.k() - 1; ++a) {
            if (ctx.is_cell({a, b})) out.push_back({a, b});
        }
    }
    return out;
}

bool is_t_crossing(std::span<const Diagonal> diagonals) {
    std::vector<Diagonal> sorted(diagonals.begin(), diagonals.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty()) return true;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].a <= sorted[i - 1].a || sorted[i].b <= sorted[i - 1].b) return false;
    }
    return sorted.back().a < sorted.front().b;
}

namespace {

// Depth-first search for a chain a_1<...<a_t, b_1<...<b_t with a_t < b_1
// over diagonals sorted by (a,b).
bool extend_chain(std::span<const Diagonal> sorted, std::size_t start, int first_b, Diagonal last,
                  int remaining) {
    if (remaining == 0) return true;
    for (std::size_t i = start; i < sorted.size(); ++i) {
        if (sorted.size() - i < static_cast<std::size_t>(remaining)) return false;
        const Diagonal d = sorted[i];
        if (d.a >= first_b) return false;  // every later a is at least as large
        if (d.a > last.a && d.b > last.b && extend_chain(sorted, i + 1, first_b, d, remaining - 1)) {
            return true;
        }
    }
    return false;
}

bool sorted_has_crossing(std::span<const Diagonal> sorted, int t) {
    if (t <= 0) return true;
    if (sorted.size() < static_cast<std::size_t>(t)) return false;
    for (std::size_t i = 0; i + t <= sorted.size(); ++i) {
        if (extend_chain(sorted, i + 1, sorted[i].b, sorted[i], t - 1)) return true;
    }
    return false;
}

}  // namespace

bool has_crossing(std::span<const Diagonal> diagonals, int t) {
    std::vector<Diagonal> sorted(diagonals.begin(), diagonals.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted_has_crossing(sorted, t);
}

bool has_crossing(const DiagonalSet& set, int t) { return sorted_has_crossing(set.diagonals(), t); }

bool creates_crossing(const DiagonalSet& set, Diagonal d, int t) {
    std::vector<Diagonal> crossing_d;
    for (Diagonal x : set) {
        if (crosses(x, d)) crossing_d.push_back(x);
    }
    return sorted_has_crossing(crossing_d, t - 1);
}

bool is_k_triangulation(const DiagonalSet& set) {
    const PolygonContext& ctx = set.context();
    const int t = ctx.k() + 1;
    if (has_crossing(set, t)) return false;
    for (Diagonal c : lambda_cells(ctx)) {
        if (!set.contains(c) && !creates_crossing(set, c, t)) return false;
    }
    KTRI_CHECK(set.size() == static_cast<std::size_t>(ctx.diagonal_count()),
               "maximal set without (k+1)-crossings has the wrong cardinality");
    return true;
}

KTriangulation complete_to_maximal(const DiagonalSet& set) {
    const int t = set.context().k() + 1;
    if (has_crossing(set, t)) throw DomainError("input already contains a (k+1)-crossing");
    DiagonalSet current = set;
    for (Diagonal c : lambda_cells(set.context())) {
        if (!current.contains(c) && !creates_crossing(current, c, t)) current = current.with(c);
    }
    return KTriangulation::certify(std::move(current));
}

namespace {

class BruteEnumerator {
public:
    explicit BruteEnumerator(const PolygonContext& ctx)
        : ctx_(ctx), cells_(lambda_cells(ctx)), crossing_(cells_.size() * cells_.size(), false) {
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            for (std::size_t j = 0; j < cells_.size(); ++j) {
                crossing_[i * cells_.size() + j] = crosses(cells_[i], cells_[j]);
            }
        }
        chosen_.reserve(cells_.size());
    }

    std::vector<KTriangulation> run() {
        recurse(0);
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    // Whether cell `c` closes a (k+1)-crossing with the chosen cells.
    bool blocked(std::size_t c) const {
        std::vector<Diagonal> partners;
        for (std::size_t x : chosen_) {
            if (crossing_[x * cells_.size() + c]) partners.push_back(cells_[x]);
        }
        std::sort(partners.begin(), partners.end());
        return sorted_has_crossing(partners, ctx_.k());
    }

    void recurse(std::size_t index) {
        if (index == cells_.size()) {
            emit();
            return;
        }
        if (!blocked(index)) {
            chosen_.push_back(index);
            recurse(index + 1);
            chosen_.pop_back();
        }
        recurse(index + 1);
    }

    void emit() {
        std::vector<bool> in(cells_.size(), false);
        for (std::size_t x : chosen_) in[x] = true;
        for (std::size_t c = 0; c < cells_.size(); ++c) {
            if (!in[c] && !blocked(c)) return;
        }
        std::vector<Diagonal> ds;
        for (std::size_t x : chosen_) ds.push_back(cells_[x]);
        found_.push_back(KTriangulation::certify(DiagonalSet(ctx_, std::move(ds))));
    }

    PolygonContext ctx_;
    std::vector<Diagonal> cells_;
    std::vector<bool> crossing_;
    std::vector<std::size_t> chosen_;
    std::vector<KTriangulation> found_;
};

}  // namespace

std::vector<KTriangulation> enumerate_brute(const PolygonContext& ctx, const EnumerationLimits& limits) {
    const std::size_t cells = lambda_cells(ctx).size();
    if (cells > limits.max_cells) {
        throw DomainError("enumerate_brute guard: " + std::to_string(cells) + " cells exceed " +
                          std::to_string(limits.max_cells));
    }
    return BruteEnumerator(ctx).run();
}

int degree(const DiagonalSet& set, int vertex) {
    return static_cast<int>(std::count_if(set.begin(), set.end(),
                                          [vertex](Diagonal d) { return d.a == vertex || d.b == vertex; }));
}

}  // namespace ktri
