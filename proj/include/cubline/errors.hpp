#pragma once

#include <stdexcept>
#include <string>

namespace cubline {

// Base class for every typed failure the library raises on purpose.
// The CLI maps these onto its exit codes; see exit_code().
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Differentiating a degree-0 form, or any graded operation that would
// need a negative degree.
class DegreeUnderflow : public Error {
public:
  using Error::Error;
};

// The three partial derivatives admit a constant linear relation
// (the curve is a cone); mdr is undefined.
class PartialsDependent : public Error {
public:
  using Error::Error;
};

// The Jacobian Hilbert function failed to reach three equal consecutive
// values below the scan cap; the singular locus is not zero dimensional.
class StabilizationFailure : public Error {
public:
  using Error::Error;
};

// du Plessis-Wall test invoked with d1 outside [0, (m-1)/2].
class MdrOutOfRange : public Error {
public:
  using Error::Error;
};

// Inequality check invoked outside its hypotheses (k >= 1, d >= 1, 3k+d >= 6).
class HypothesisViolated : public Error {
public:
  using Error::Error;
};

// A singular point whose local structure is none of the supported types.
class UnsupportedSingularity : public Error {
public:
  using Error::Error;
};

// Two arrangement members share a component (a resultant vanished identically).
class SharedComponent : public Error {
public:
  using Error::Error;
};

// Every retry of the sheared projection stayed degenerate.
class ProjectionDegenerate : public Error {
public:
  using Error::Error;
};

// A census total contradicted the incidence count identity.
class CountMismatch : public Error {
public:
  using Error::Error;
};

// A curve required to be smooth is singular.
class NotSmooth : public Error {
public:
  using Error::Error;
};

// Tangent line requested at a singular point of the curve.
class SingularPoint : public Error {
public:
  using Error::Error;
};

// Built-in example name not recognized.
class UnknownExample : public Error {
public:
  using Error::Error;
};

// Malformed arrangement file or polynomial text.
class ParseError : public Error {
public:
  using Error::Error;
};

// A requested computation does not apply to the given input
// (e.g. exact analysis of a numeric-only arrangement).
class NotApplicable : public Error {
public:
  using Error::Error;
};

// Exit code the CLI uses for a given failure. 1 is the generic error code.
int exit_code(const Error& e);

}  // namespace cubline
