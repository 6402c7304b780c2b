#pragma once

// Dyck paths over {N, E}, non-crossing tuples, the run-exponent pair
// encoding, and exact Catalan determinants.

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ktri/limits.hpp"

namespace ktri {

using BigInt = boost::multiprecision::cpp_int;

/// A lattice path from (0,0) to (m,m) never below y = x. Text form is the
/// bare step string, e.g. "NNENEE".
class DyckPath {
public:
    /// Throws DomainError on bad characters, unbalanced steps, or a prefix
    /// going below the diagonal.
    static DyckPath parse(std::string_view steps);

    int semilength() const { return static_cast<int>(steps_.size() / 2); }
    const std::string& steps() const { return steps_; }

    /// E-steps taken before the j-th N step, j = 1..m (zero-based result).
    std::vector<int> east_before_north() const;

    friend auto operator<=>(const DyckPath& x, const DyckPath& y) { return compare(x, y); }
    friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
    explicit DyckPath(std::string steps) : steps_(std::move(steps)) {}
    // Lexicographic with N < E.
    static std::strong_ordering compare(const DyckPath& x, const DyckPath& y);
    std::string steps_;
};

/// Run exponents (p_1..p_m) of P = N E^{p_m} N E^{p_{m-1}} ... N E^{p_1} E.
/// Stored one-based: index 0 is unused.
struct ExponentForm {
    std::vector<int> p;

    int semilength() const { return static_cast<int>(p.size()) - 1; }
    /// p_j, or 0 for j beyond m (the padding convention).
    int at(int j) const { return j >= 1 && j <= semilength() ? p[static_cast<std::size_t>(j)] : 0; }

    /// p_1+...+p_t >= t-1 for all t and the total is m-1.
    bool valid() const;

    friend bool operator==(const ExponentForm&, const ExponentForm&) = default;
};

ExponentForm to_exponents(const DyckPath& path);
DyckPath from_exponents(const ExponentForm& exponents);

/// P never goes below Q. Throws DomainError on semilength mismatch.
bool dominates(const DyckPath& upper, const DyckPath& lower);

/// The same relation evaluated on exponent prefix sums.
bool dominates(const ExponentForm& upper, const ExponentForm& lower);

struct PathPair {
    DyckPath upper;
    DyckPath lower;

    friend auto operator<=>(const PathPair&, const PathPair&) = default;
};

/// k-tuple of semilength-m paths with each path dominating the next.
struct PathTuple {
    std::vector<DyckPath> paths;

    int semilength() const { return paths.empty() ? 0 : paths.front().semilength(); }
    std::size_t size() const { return paths.size(); }

    friend auto operator<=>(const PathTuple&, const PathTuple&) = default;
};

/// The 2 x (m+2) exponent matrix of a dominating pair
///
///     [ p_{m+2} p_{m+1} p_m ... p_2 p_1 ]
///     [ q_{m+1} q_m     ...     q_1  0  ]
///
/// with p_{m+2} = p_{m+1} = q_{m+1} = 0. Both sequences are stored one-based
/// with the padding entries present: p has indices 1..m+2, q has 1..m+1.
class PairEncoding {
public:
    /// Throws DomainError unless both are valid exponent forms of the same
    /// semilength and the prefix sums of p dominate those of q.
    PairEncoding(ExponentForm p, ExponentForm q);

    static PairEncoding from_paths(const DyckPath& upper, const DyckPath& lower);
    static PairEncoding root();

    int semilength() const { return m_; }
    /// p_j for j >= 1, 0 beyond the stored range.
    int p(int j) const;
    int q(int j) const;

    /// Rows as printed: top (p_{m+2}..p_1), bottom (q_{m+1}..q_1, 0).
    std::vector<std::vector<int>> matrix() const;

    PathPair paths() const;

    friend bool operator==(const PairEncoding&, const PairEncoding&) = default;
    friend auto operator<=>(const PairEncoding&, const PairEncoding&) = default;

private:
    int m_;
    std::vector<int> p_;  // size m+3, p_[0] unused
    std::vector<int> q_;  // size m+2, q_[0] unused
};

/// min{ j >= 2 : p_j q_j = 0 }; always in [2, m+1].
int s_param(const PairEncoding& encoding);

BigInt catalan(int m);

/// det(C_{n-i-j})_{i,j=1..k}, by fraction-free (Bareiss) elimination.
BigInt jonsson_count(int n, int k);

/// Dyck paths of semilength m in lexicographic order (N < E).
std::vector<DyckPath> enumerate_dyck_paths(int m);

/// All k-tuples of semilength-m paths with P_i dominating P_{i+1}, in
/// lexicographic order of step strings. Guarded on m*k.
std::vector<PathTuple> enumerate_tuples(int m, int k, const EnumerationLimits& limits = {});

}  // namespace ktri
