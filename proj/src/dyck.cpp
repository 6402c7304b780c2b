#include "ktri/dyck.hpp"

#include <algorithm>

#include "ktri/errors.hpp"

namespace ktri {

DyckPath DyckPath::parse(std::string_view steps) {
    int height = 0;
    for (char c : steps) {
        if (c == 'N') {
            ++height;
        } else if (c == 'E') {
            if (--height < 0) throw DomainError("'" + std::string(steps) + "' goes below the diagonal");
        } else {
            throw DomainError("'" + std::string(steps) + "' contains a step other than N or E");
        }
    }
    if (height != 0) throw DomainError("'" + std::string(steps) + "' does not end on the diagonal");
    if (steps.empty()) throw DomainError("empty Dyck path");
    return DyckPath(std::string(steps));
}

std::strong_ordering DyckPath::compare(const DyckPath& x, const DyckPath& y) {
    auto rank = [](char c) { return c == 'N' ? 0 : 1; };
    const std::size_t len = std::min(x.steps_.size(), y.steps_.size());
    for (std::size_t i = 0; i < len; ++i) {
        if (auto c = rank(x.steps_[i]) <=> rank(y.steps_[i]); c != 0) return c;
    }
    return x.steps_.size() <=> y.steps_.size();
}

std::vector<int> DyckPath::east_before_north() const {
    std::vector<int> out;
    int east = 0;
    for (char c : steps_) {
        if (c == 'N') {
            out.push_back(east);
        } else {
            ++east;
        }
    }
    return out;
}

bool ExponentForm::valid() const {
    const int m = semilength();
    if (m < 1) return false;
    int sum = 0;
    for (int t = 1; t <= m; ++t) {
        if (p[static_cast<std::size_t>(t)] < 0) return false;
        sum += p[static_cast<std::size_t>(t)];
        if (sum < t - 1) return false;
    }
    return sum == m - 1;
}

ExponentForm to_exponents(const DyckPath& path) {
    const int m = path.semilength();
    ExponentForm out{std::vector<int>(static_cast<std::size_t>(m) + 1, 0)};
    // Runs of E after the i-th N: p_{m+1-i} for i < m, p_1 + 1 for the last.
    int north = 0;
    for (char c : path.steps()) {
        if (c == 'N') {
            ++north;
        } else if (north > 0) {
            ++out.p[static_cast<std::size_t>(m + 1 - north)];
        }
    }
    --out.p[1];
    return out;
}

DyckPath from_exponents(const ExponentForm& exponents) {
    if (!exponents.valid()) throw DomainError("exponent sequence is not a Dyck path");
    std::string steps;
    for (int j = exponents.semilength(); j >= 1; --j) {
        steps += 'N';
        steps.append(static_cast<std::size_t>(exponents.at(j)), 'E');
    }
    steps += 'E';
    return DyckPath::parse(steps);
}

bool dominates(const DyckPath& upper, const DyckPath& lower) {
    if (upper.semilength() != lower.semilength()) throw DomainError("semilength mismatch");
    const auto up = upper.east_before_north();
    const auto low = lower.east_before_north();
    for (std::size_t i = 0; i < up.size(); ++i) {
        if (up[i] > low[i]) return false;
    }
    return true;
}

bool dominates(const ExponentForm& upper, const ExponentForm& lower) {
    if (upper.semilength() != lower.semilength()) throw DomainError("semilength mismatch");
    int su = 0;
    int sl = 0;
    for (int t = 1; t <= upper.semilength(); ++t) {
        su += upper.at(t);
        sl += lower.at(t);
        if (su < sl) return false;
    }
    return true;
}

PairEncoding::PairEncoding(ExponentForm p, ExponentForm q) : m_(p.semilength()) {
    if (!p.valid() || !q.valid()) throw DomainError("pair encoding needs valid exponent sequences");
    if (q.semilength() != m_) throw DomainError("semilength mismatch");
    if (!dominates(p, q)) throw DomainError("upper path goes below lower path");
    p_ = std::move(p.p);
    p_.resize(static_cast<std::size_t>(m_) + 3, 0);
    q_ = std::move(q.p);
    q_.resize(static_cast<std::size_t>(m_) + 2, 0);
}

PairEncoding PairEncoding::from_paths(const DyckPath& upper, const DyckPath& lower) {
    return PairEncoding(to_exponents(upper), to_exponents(lower));
}

PairEncoding PairEncoding::root() { return from_paths(DyckPath::parse("NE"), DyckPath::parse("NE")); }

int PairEncoding::p(int j) const {
    return j >= 1 && j < static_cast<int>(p_.size()) ? p_[static_cast<std::size_t>(j)] : 0;
}

int PairEncoding::q(int j) const {
    return j >= 1 && j < static_cast<int>(q_.size()) ? q_[static_cast<std::size_t>(j)] : 0;
}

std::vector<std::vector<int>> PairEncoding::matrix() const {
    std::vector<int> top;
    std::vector<int> bottom;
    for (int j = m_ + 2; j >= 1; --j) top.push_back(p(j));
    for (int j = m_ + 1; j >= 1; --j) bottom.push_back(q(j));
    bottom.push_back(0);
    return {top, bottom};
}

PathPair PairEncoding::paths() const {
    ExponentForm up{std::vector<int>(p_.begin(), p_.begin() + m_ + 1)};
    ExponentForm low{std::vector<int>(q_.begin(), q_.begin() + m_ + 1)};
    return {from_exponents(up), from_exponents(low)};
}

int s_param(const PairEncoding& e) {
    for (int j = 2; j <= e.semilength() + 1; ++j) {
        if (e.p(j) * e.q(j) == 0) return j;
    }
    KTRI_CHECK(false, "s(P,Q) exceeds m+1");
    return -1;
}

BigInt catalan(int m) {
    if (m < 0) return 0;
    BigInt c = 1;
    // C_{i+1} = C_i * 2(2i+1) / (i+2), exact at every step.
    for (int i = 0; i < m; ++i) c = c * (2 * (2 * i + 1)) / (i + 2);
    return c;
}

BigInt jonsson_count(int n, int k) {
    if (k < 1 || (k > 1 && n <= 2 * k)) throw DomainError("jonsson_count requires n > 2k >= 2 or k = 1");
    const auto size = static_cast<std::size_t>(k);
    std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size));
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) a[i - 1][j - 1] = catalan(n - i - j);
    }

    // Bareiss: after step s every entry of the trailing block is an integer
    // minor, and division by the previous pivot is exact.
    BigInt sign = 1;
    BigInt previous = 1;
    for (std::size_t s = 0; s < size; ++s) {
        if (a[s][s] == 0) {
            std::size_t swap = s + 1;
            while (swap < size && a[swap][s] == 0) ++swap;
            if (swap == size) return 0;
            std::swap(a[s], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = s + 1; i < size; ++i) {
            for (std::size_t j = s + 1; j < size; ++j) {
                a[i][j] = (a[i][j] * a[s][s] - a[i][s] * a[s][j]) / previous;
            }
        }
        previous = a[s][s];
    }
    return sign * a[size - 1][size - 1];
}

std::vector<DyckPath> enumerate_dyck_paths(int m) {
    if (m < 1) throw DomainError("semilength must be positive");
    std::vector<DyckPath> out;
    std::string steps;
    auto recurse = [&](auto& self, int north, int east) -> void {
        if (north == m && east == m) {
            out.push_back(DyckPath::parse(steps));
            return;
        }
        if (north < m) {
            steps.push_back('N');
            self(self, north + 1, east);
            steps.pop_back();
        }
        if (east < north) {
            steps.push_back('E');
            self(self, north, east + 1);
            steps.pop_back();
        }
    };
    recurse(recurse, 0, 0);
    return out;
}

std::vector<PathTuple> enumerate_tuples(int m, int k, const EnumerationLimits& limits) {
    if (m < 1 || k < 1) throw DomainError("enumerate_tuples requires m >= 1 and k >= 1");
    if (static_cast<std::size_t>(m) * static_cast<std::size_t>(k) > limits.max_tuple_cells) {
        throw DomainError("enumerate_tuples guard: m*k = " + std::to_string(m * k) + " exceeds " +
                          std::to_string(limits.max_tuple_cells));
    }
    const std::vector<DyckPath> paths = enumerate_dyck_paths(m);
    std::vector<PathTuple> out;
    PathTuple current;
    auto recurse = [&](auto& self) -> void {
        if (current.size() == static_cast<std::size_t>(k)) {
            out.push_back(current);
            return;
        }
        for (const DyckPath& next : paths) {
            if (!current.paths.empty() && !dominates(current.paths.back(), next)) continue;
            current.paths.push_back(next);
            self(self);
            current.paths.pop_back();
        }
    };
    recurse(recurse);
    return out;
}

}  // namespace ktri
