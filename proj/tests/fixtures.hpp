#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "ktri/gentree2.hpp"
#include "ktri/polygon.hpp"

namespace ktri {

// Readable failure messages in gtest.
inline void PrintTo(const KTriangulation& t, std::ostream* os) {
    *os << "n=" << t.n() << " k=" << t.k() << " {";
    for (Diagonal d : t.diagonals()) *os << ' ' << d.a << '-' << d.b;
    *os << " }";
}

inline void PrintTo(const TreeLabel& l, std::ostream* os) { *os << l.str(); }

inline void PrintTo(const Diagonal& d, std::ostream* os) { *os << d.a << '-' << d.b; }

}  // namespace ktri

namespace fixture {

inline ktri::KTriangulation tri(int n, int k, std::initializer_list<ktri::Diagonal> ds) {
    return ktri::KTriangulation::certify(ktri::DiagonalSet(ktri::PolygonContext(n, k), std::vector<ktri::Diagonal>(ds)));
}

// The running fourteen-gon example.
inline ktri::KTriangulation fourteen_gon() {
    return tri(14, 2, {{1, 4}, {1, 6}, {1, 9}, {2, 6}, {2, 9}, {2, 13}, {3, 6}, {4, 8}, {4, 9},
                       {5, 8}, {6, 13}, {7, 12}, {7, 13}, {8, 11}, {8, 12}, {9, 14}, {10, 13}, {10, 14}});
}
inline const std::string fourteen_gon_P = "NNENNEENNNENENEENEEE";
inline const std::string fourteen_gon_Q = "NENNEENNNEEENNNENEEE";

inline ktri::KTriangulation heptagon() { return tri(7, 2, {{1, 5}, {2, 5}, {3, 6}, {3, 7}}); }

// 3-triangulations of the 9-gon and the 11-gon.
inline ktri::KTriangulation nonagon3() { return tri(9, 3, {{1, 5}, {1, 6}, {3, 7}, {3, 8}, {4, 8}, {4, 9}}); }
inline ktri::KTriangulation hendecagon3() {
    return tri(11, 3, {{1, 5}, {1, 6}, {2, 6}, {2, 7}, {2, 9}, {3, 7}, {3, 8}, {3, 9}, {3, 10}, {6, 10}, {6, 11}, {7, 11}});
}

}  // namespace fixture
