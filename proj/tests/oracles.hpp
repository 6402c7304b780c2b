#pragma once

// Slow reference implementations used only by the tests. None of them
// calls into the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Chord = std::pair<int, int>;
using ChordSet = std::vector<Chord>;  // sorted

// Two chords of a convex polygon cross iff exactly one endpoint of the
// second lies strictly on each side of the first.
inline bool chords_cross(Chord x, Chord y) {
    auto strictly_inside = [&](int v) { return x.first < v && v < x.second; };
    if (x.first == y.first || x.first == y.second || x.second == y.first || x.second == y.second) return false;
    return strictly_inside(y.first) != strictly_inside(y.second);
}

inline bool pairwise_crossing(const std::vector<Chord>& cs) {
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (!chords_cross(cs[i], cs[j])) return false;
    return true;
}

inline int cyclic_length(Chord c, int n) { return std::min(c.second - c.first, n - (c.second - c.first)); }

// Every chord of the n-gon that is not a side.
inline std::vector<Chord> all_chords(int n) {
    std::vector<Chord> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 2; b <= n; ++b)
            if (!(a == 1 && b == n)) out.push_back({a, b});
    return out;
}

// Is there a set of t pairwise crossing chords in `chosen` that contains `c`?
inline bool extends_to_crossing(const std::vector<Chord>& chosen, Chord c, int t) {
    std::vector<Chord> nbrs;
    for (Chord d : chosen)
        if (chords_cross(c, d)) nbrs.push_back(d);
    if (static_cast<int>(nbrs.size()) < t - 1) return false;
    std::vector<Chord> clique;
    auto grow = [&](auto& self, std::size_t from) -> bool {
        if (static_cast<int>(clique.size()) == t - 1) return true;
        for (std::size_t i = from; i < nbrs.size(); ++i) {
            bool ok = true;
            for (Chord e : clique) ok = ok && chords_cross(e, nbrs[i]);
            if (!ok) continue;
            clique.push_back(nbrs[i]);
            if (self(self, i + 1)) return true;
            clique.pop_back();
        }
        return false;
    };
    return grow(grow, 0);
}

// All maximal (k+1)-crossing-free chord sets of the n-gon, by plain subset
// search over every chord. Returned with the chords of cyclic length <= k
// stripped, each sorted, the list sorted. Exponential; keep n small.
inline std::vector<ChordSet> k_triangulations(int n, int k) {
    const std::vector<Chord> chords = all_chords(n);
    std::vector<Chord> chosen;
    std::vector<ChordSet> out;
    auto search = [&](auto& self, std::size_t i) -> void {
        if (i == chords.size()) {
            for (Chord c : chords) {
                if (std::find(chosen.begin(), chosen.end(), c) == chosen.end() &&
                    !extends_to_crossing(chosen, c, k + 1))
                    return;  // not maximal
            }
            ChordSet nontrivial;
            for (Chord c : chosen)
                if (cyclic_length(c, n) > k) nontrivial.push_back(c);
            std::sort(nontrivial.begin(), nontrivial.end());
            out.push_back(nontrivial);
            return;
        }
        if (!extends_to_crossing(chosen, chords[i], k + 1)) {
            chosen.push_back(chords[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
        self(self, i + 1);
    };
    search(search, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline Big binomial(int n, int r) {
    Big out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

inline Big catalan(int m) { return m < 0 ? Big(0) : binomial(2 * m, m) / (m + 1); }

// det(C_{n-i-j})_{i,j=1..k} by the permutation expansion.
inline Big catalan_determinant(int n, int k) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    Big total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        Big term = inversions % 2 ? -1 : 1;
        for (int i = 1; i <= k; ++i) term *= catalan(n - i - perm[static_cast<std::size_t>(i - 1)]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Dyck paths as N/E words, by filtering all 2^(2m) words.
inline std::vector<std::string> dyck_words(int m) {
    std::vector<std::string> out;
    for (std::uint32_t bits = 0; bits < (1u << (2 * m)); ++bits) {
        std::string w;
        int height = 0;
        bool ok = true;
        for (int i = 2 * m - 1; i >= 0 && ok; --i) {
            const bool north = !((bits >> i) & 1u);
            w += north ? 'N' : 'E';
            height += north ? 1 : -1;
            ok = height >= 0;
        }
        if (ok && height == 0) out.push_back(w);
    }
    // N before E, which is not ASCII order.
    std::sort(out.begin(), out.end(), [](const std::string& x, const std::string& y) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != y[i]) return x[i] == 'N';
        return false;
    });
    return out;
}

// P weakly above Q: at every prefix P has at least as many N steps.
inline bool above(const std::string& p, const std::string& q) {
    int np = 0, nq = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        np += p[i] == 'N';
        nq += q[i] == 'N';
        if (np < nq) return false;
    }
    return true;
}

inline std::vector<std::vector<std::string>> dyck_tuples(int m, int k) {
    const auto words = dyck_words(m);
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> cur;
    auto grow = [&](auto& self) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (const auto& w : words) {
            if (!cur.empty() && !above(cur.back(), w)) continue;
            cur.push_back(w);
            self(self);
            cur.pop_back();
        }
    };
    grow(grow);
    return out;
}

// Direct transcription of the succession rule on labels.
inline std::vector<std::vector<int>> rule_children(const std::vector<int>& d) {
    const int s = static_cast<int>(d.size());
    std::vector<std::vector<int>> out;
    for (int j = 1; j <= s - 1; ++j) {
        for (int i = 0; i <= d[static_cast<std::size_t>(j - 1)]; ++i) {
            std::vector<int> c{i, d[static_cast<std::size_t>(j - 1)] - i + 1, d[static_cast<std::size_t>(j)] + 1};
            c.insert(c.end(), d.begin() + j + 1, d.end());
            out.push_back(c);
        }
    }
    for (int i = 0; i <= d.back() + 1; ++i) out.push_back({i, d.back() - i + 1});
    return out;
}

}  // namespace oracle
