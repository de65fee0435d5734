#pragma once

#include <string>
#include <vector>

#include "omega4/quiver.hpp"

namespace omega4 {

/// Parsed algebra description: the line format is
///   # comment
///   field <p>
///   vertex <id>
///   arrow <name> <src> <dst>
///   rel <expr>
/// where <expr> is terms joined by + or -, each term [<int>*]<path> and a
/// path is arrow names joined by '.'. Field defaults to 2 when omitted.
struct AlgebraSpec {
  PrimeField field{2};
  Quiver quiver;
  std::vector<Relation> relations;
};

AlgebraSpec parse_spec(const std::string& text);
AlgebraSpec parse_spec_file(const std::string& path);

std::string emit_spec(const PrimeField& f, const Quiver& q,
                      const std::vector<Relation>& rels);

}  // namespace omega4
