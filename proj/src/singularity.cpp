#include <cubline/singularity.hpp>

namespace cubline {

const SingularityType& singularity_info(SingularityKind kind) {
  static const SingularityType a1{SingularityKind::A1, 1, 1, Rational(1), 1};
  static const SingularityType d4{SingularityKind::D4, 4, 4, rational(2, 3), 3};
  static const SingularityType a5{SingularityKind::A5, 5, 5, rational(2, 3), 3};
  switch (kind) {
    case SingularityKind::A1: return a1;
    case SingularityKind::D4: return d4;
    default: return a5;
  }
}

std::string to_string(SingularityKind kind) {
  switch (kind) {
    case SingularityKind::A1: return "A1";
    case SingularityKind::D4: return "D4";
    default: return "A5";
  }
}

}  // namespace cubline
