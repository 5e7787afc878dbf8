#pragma once

#include <cubline/rational.hpp>

#include <string>

namespace cubline {

// The three local types an arrangement of smooth cubics and lines in
// general position off the contact locus can produce:
//   A1  node, two transverse smooth branches
//   D4  ordinary triple point, three pairwise transverse smooth branches
//   A5  two smooth branches with contact of order three
enum class SingularityKind { A1, D4, A5 };

struct SingularityType {
  SingularityKind name;
  int milnor;
  int tjurina;
  Rational log_canonical_threshold;
  // Pairwise intersection multiplicity the point absorbs:
  // A1 one transverse pair, D4 three transverse pairs, A5 one pair of
  // multiplicity three.
  int intersection_cost;
};

const SingularityType& singularity_info(SingularityKind kind);

std::string to_string(SingularityKind kind);

}  // namespace cubline
