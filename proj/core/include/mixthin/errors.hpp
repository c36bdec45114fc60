// Exception types shared across the mixthin library.  Each operation that can
// reject its input throws one of these; the CLI maps them to exit code 2
// (input error) unless noted otherwise at the call site.
#pragma once

#include <stdexcept>
#include <string>

namespace mixthin {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A supplied vertex order is not a permutation of the expected set.
struct InvalidOrder : Error { using Error::Error; };
// Attempt to contract a group with itself.
struct SelfContraction : Error { using Error::Error; };
// Matrix/boundary dimensions do not match.
struct ShapeError : Error { using Error::Error; };
// A witness is malformed or rejected where acceptance is a precondition.
struct InvalidWitness : Error { using Error::Error; };
// Two orders that should range over the same ground set do not.
struct DomainMismatch : Error { using Error::Error; };
// A relation whose closure should be a partial order has a directed cycle.
struct NotAntisymmetric : Error { using Error::Error; };
// Input that must be a tree is not one.
struct NotATree : Error { using Error::Error; };
// Generator parameters outside the documented range.
struct InvalidParameters : Error { using Error::Error; };
// A path representation where one path's vertex set contains another's.
struct NotProper : Error { using Error::Error; };
// A claimed path in the subdivision is disconnected or not a path.
struct InvalidPath : Error { using Error::Error; };
// A contraction trace references groups that do not exist at replay time.
struct MalformedTrace : Error { using Error::Error; };
// Input below the minimum size for the operation.
struct TooSmall : Error { using Error::Error; };
// A search exceeded its configured budget.
struct BudgetExceeded : Error { using Error::Error; };
// Formula evaluation hit a free variable with no assignment.
struct UnboundVariable : Error { using Error::Error; };
// Unknown relation/mark/formula name.
struct UnknownSymbol : Error { using Error::Error; };
// A marked poset does not carry a consistent encoding.
struct NotAnEncoding : Error { using Error::Error; };
// JSON input did not match the expected schema.
struct ParseError : Error { using Error::Error; };
// Structurally valid input violating a type invariant.
struct ValidationError : Error { using Error::Error; };

}  // namespace mixthin
