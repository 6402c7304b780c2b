#pragma once

#include <string>
#include <vector>

#include "ktri/polygon.hpp"

namespace ktri {

enum class Lemma {
    InsideDiagonal,        // (a,b) in T, a<b-3  =>  (a,b-1) in T or some (a',b), a<a'<=b-3
    ShortBelow,            // (a,b) in T  =>  some (i,i+3) in T with a <= i <= b-3
    NoShortDegrees,        // (a,a+3) not in T  =>  deg(a+1), deg(a+2) > 0   (mod n, n >= 6)
    DegreeZeroNeighbours,  // deg(a) = 0  =>  (a-2,a+1), (a-1,a+2) in T      (mod n, n >= 6)
    InsideDiagonalK,       // general-k form of InsideDiagonal
    ShortBelowK,           // general-k form of ShortBelow
    CornerSelectors,       // (a_i, r+i+1) in T or trivial; column r+k empty below a_{k-1}
};

std::string lemma_name(Lemma lemma);

struct LemmaResult {
    Lemma lemma;
    bool applicable = false;  // the lemma's setting applies (k, n)
    int instances = 0;        // hypothesis instances evaluated
    bool passed = true;
    std::string witness{};    // first failing instance
};

struct LemmaReport {
    std::vector<LemmaResult> results;

    bool all_passed() const;
    const LemmaResult& operator[](Lemma lemma) const;
};

/// Evaluates every hypothesis instance of each applicable structure lemma.
/// The set is taken as-is; no maximality is assumed.
LemmaReport check_structure_lemmas(const DiagonalSet& set);

}  // namespace ktri
