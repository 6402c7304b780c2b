#pragma once

// Line-oriented text formats and ASCII renderings.
//
//   triangulation   k=<k> n=<n>
//                   1-4,2-5            (sorted; "-" when empty)
//   pair            P and Q step strings, one per line
//   tuple           P_1 .. P_k, one per line
//   tree dump       level<TAB>label<TAB>object, depth first in child order

#include <iosfwd>
#include <string>
#include <string_view>

#include "ktri/dyck.hpp"
#include "ktri/polygon.hpp"

namespace ktri {

std::string format_diagonal_list(const DiagonalSet& set);
std::string format_triangulation(const DiagonalSet& set);
std::string format_pair(const PathPair& pair);
std::string format_tuple(const PathTuple& tuple);

/// Throws DomainError on malformed text. Trailing blank lines are ignored.
DiagonalSet parse_triangulation(std::string_view text);
PathPair parse_pair(std::string_view text);
PathTuple parse_tuple(std::string_view text);

/// True when the text starts with a "k=" header line.
bool looks_like_triangulation(std::string_view text);

/// Staircase drawing: header of column indices k+2..n, then one line per row
/// holding a cell, with X for a diagonal and . for an empty cell. Trailing
/// spaces are trimmed.
std::string render_diagram(const DiagonalSet& set);

/// Lattice drawing of the pair; P marked '#', Q marked 'o', shared '*'.
/// Shifted places P from (0,1) and Q from (1,0).
std::string render_paths(const PathPair& pair, bool shifted);

/// Tree dumps down to the n-gon (or down to semilength m for pairs).
void write_triangulation_tree(std::ostream& out, int k, int n);
void write_pair_tree(std::ostream& out, int m);

}  // namespace ktri
