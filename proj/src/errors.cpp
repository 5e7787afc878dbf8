#include <cubline/errors.hpp>

namespace cubline {

int exit_code(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 2;
  if (dynamic_cast<const UnsupportedSingularity*>(&e)) return 3;
  if (dynamic_cast<const NotApplicable*>(&e)) return 5;
  return 1;
}

}  // namespace cubline
