#pragma once

// The .lie text format:
//
//   # comment
//   name <string>
//   ring p=<prime> [f=<deg> | e=<exp>]
//   dim <h>
//   bracket <i> <j> : <coeff> <k> [<coeff> <k> ...]
//
// Indices are 1-based; [e_i, e_j] = sum coeff e_k. Coefficients are integers, or
// (a0,a1,...) tuples over GF(p^f) with f > 1. Each unordered pair appears at most once.

#include <string>
#include <string_view>

#include "pgc/liecore.hpp"

namespace pgc {

// Throws SyntaxError, DuplicateBracket or BadCoefficient; the table is validated.
lie::Table parse_lie(std::string_view text);
// Canonical form: name, ring, dim, then one line per i < j in order, terms by k.
std::string emit_lie(const lie::Table& table);

lie::Table read_lie_file(const std::string& path);
void write_lie_file(const std::string& path, const lie::Table& table);

}  // namespace pgc
