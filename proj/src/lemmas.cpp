#include "ktri/lemmas.hpp"

#include <algorithm>

#include "ktri/errors.hpp"

namespace ktri {

std::string lemma_name(Lemma lemma) {
    switch (lemma) {
        case Lemma::InsideDiagonal: return "inside-diagonal";
        case Lemma::ShortBelow: return "short-below";
        case Lemma::NoShortDegrees: return "no-short-degrees";
        case Lemma::DegreeZeroNeighbours: return "degree-zero-neighbours";
        case Lemma::InsideDiagonalK: return "inside-diagonal-k";
        case Lemma::ShortBelowK: return "short-below-k";
        case Lemma::CornerSelectors: return "corner-selectors";
    }
    return "?";
}

bool LemmaReport::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const LemmaResult& r) { return r.passed; });
}

const LemmaResult& LemmaReport::operator[](Lemma lemma) const {
    auto it = std::find_if(results.begin(), results.end(), [lemma](const LemmaResult& r) { return r.lemma == lemma; });
    KTRI_CHECK(it != results.end(), "lemma missing from report");
    return *it;
}

namespace {

std::string show(Diagonal d) {
    return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

void fail(LemmaResult& result, const std::string& witness) {
    if (result.passed) result.witness = witness;
    result.passed = false;
}

LemmaResult inside_diagonal(const DiagonalSet& set, Lemma lemma) {
    const int k = set.context().k();
    LemmaResult out{.lemma = lemma, .applicable = true};
    for (Diagonal d : set) {
        if (!(d.a < d.b - k - 1)) continue;
        ++out.instances;
        bool ok = set.contains({d.a, d.b - 1});
        for (int a2 = d.a + 1; !ok && a2 <= d.b - k - 1; ++a2) ok = set.contains({a2, d.b});
        if (!ok) fail(out, show(d) + " has neither " + show({d.a, d.b - 1}) + " nor an inner partner");
    }
    return out;
}

LemmaResult short_below(const DiagonalSet& set, Lemma lemma) {
    const int k = set.context().k();
    LemmaResult out{.lemma = lemma, .applicable = true};
    for (Diagonal d : set) {
        ++out.instances;
        bool ok = false;
        for (int i = d.a; !ok && i <= d.b - k - 1; ++i) ok = set.contains({i, i + k + 1});
        if (!ok) fail(out, show(d) + " has no short diagonal beneath it");
    }
    return out;
}

int wrap(int v, int n) { return ((v - 1) % n + n) % n + 1; }

LemmaResult no_short_degrees(const DiagonalSet& set) {
    const int n = set.context().n();
    LemmaResult out{.lemma = Lemma::NoShortDegrees, .applicable = set.context().k() == 2 && n >= 6};
    if (!out.applicable) return out;
    for (int a = 1; a <= n; ++a) {
        const Diagonal shortd = Diagonal::between(wrap(a, n), wrap(a + 3, n));
        if (set.contains(shortd)) continue;
        ++out.instances;
        if (degree(set, wrap(a + 1, n)) == 0 || degree(set, wrap(a + 2, n)) == 0) {
            fail(out, show(shortd) + " absent but vertex " + std::to_string(wrap(a + 1, n)) + " or " +
                          std::to_string(wrap(a + 2, n)) + " has degree 0");
        }
    }
    return out;
}

LemmaResult degree_zero_neighbours(const DiagonalSet& set) {
    const int n = set.context().n();
    LemmaResult out{.lemma = Lemma::DegreeZeroNeighbours, .applicable = set.context().k() == 2 && n >= 6};
    if (!out.applicable) return out;
    for (int a = 1; a <= n; ++a) {
        if (degree(set, a) != 0) continue;
        ++out.instances;
        const Diagonal left = Diagonal::between(wrap(a - 2, n), wrap(a + 1, n));
        const Diagonal right = Diagonal::between(wrap(a - 1, n), wrap(a + 2, n));
        if (!set.contains(left) || !set.contains(right)) {
            fail(out, "vertex " + std::to_string(a) + " has degree 0 but " + show(left) + " or " + show(right) +
                          " is missing");
        }
    }
    return out;
}

LemmaResult corner_selectors(const DiagonalSet& set) {
    const PolygonContext& ctx = set.context();
    const int n = ctx.n();
    const int k = ctx.k();
    LemmaResult out{.lemma = Lemma::CornerSelectors, .applicable = k >= 2 && n >= 2 * k + 2};
    if (!out.applicable) return out;

    int r = 0;
    for (Diagonal d : set) {
        if (d.b == d.a + k + 1) r = std::max(r, d.a);
    }
    ++out.instances;
    if (r < k) {
        fail(out, "corner " + std::to_string(r) + " is below k");
        return out;
    }

    int previous = 0;
    for (int i = 1; i <= k - 1; ++i) {
        ++out.instances;
        int selector = r + i - k;  // always in A_i
        for (Diagonal d : set) {
            if (d.b == r + i && d.a > previous) selector = std::min(selector, d.a);
        }
        if (selector <= previous) {
            fail(out, "no admissible a_" + std::to_string(i));
            return out;
        }
        const Diagonal next{selector, r + i + 1};
        if (!set.contains(next) && !ctx.is_trivial(next)) {
            fail(out, "a_" + std::to_string(i) + "=" + std::to_string(selector) + " but " + show(next) +
                          " is neither present nor trivial");
        }
        previous = selector;
    }
    ++out.instances;
    for (Diagonal d : set) {
        if (d.b == r + k && d.a > previous) {
            fail(out, "column " + std::to_string(r + k) + " has " + show(d) + " below row a_{k-1}=" +
                          std::to_string(previous));
        }
    }
    return out;
}

}  // namespace

LemmaReport check_structure_lemmas(const DiagonalSet& set) {
    const int k = set.context().k();
    LemmaReport report;

    LemmaResult inside2 = k == 2 ? inside_diagonal(set, Lemma::InsideDiagonal) : LemmaResult{.lemma = Lemma::InsideDiagonal};
    LemmaResult short2 = k == 2 ? short_below(set, Lemma::ShortBelow) : LemmaResult{.lemma = Lemma::ShortBelow};
    report.results.push_back(std::move(inside2));
    report.results.push_back(std::move(short2));
    report.results.push_back(no_short_degrees(set));
    report.results.push_back(degree_zero_neighbours(set));
    report.results.push_back(k >= 2 ? inside_diagonal(set, Lemma::InsideDiagonalK) : LemmaResult{.lemma = Lemma::InsideDiagonalK});
    report.results.push_back(k >= 2 ? short_below(set, Lemma::ShortBelowK) : LemmaResult{.lemma = Lemma::ShortBelowK});
    report.results.push_back(corner_selectors(set));
    return report;
}

}  // namespace ktri
