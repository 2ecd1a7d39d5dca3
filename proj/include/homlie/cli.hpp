#ifndef HOMLIE_CLI_HPP
#define HOMLIE_CLI_HPP

#include "homlie/homalg.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homlie {

/// In-memory form of an algebra JSON document:
///
///   { "dim": 3, "basis": ["h","e","f"],
///     "structure": [ {"i":0,"j":1,"k":1,"value":"2"}, ... ],
///     "alpha": [["1","0","0"], ...],   // optional, rows of the matrix
///     "kind": "lie" }                  // optional
///
/// Omitted structure entries are zero. Rationals are strings "p/q" or "p";
/// JSON integers are also accepted, floating-point literals are not.
struct AlgebraDocument {
  FinAlgebra algebra;
  std::optional<LinearSelfMap> alpha;
  std::optional<std::string> kind;  // associative, lie, left-symmetric, lie-admissible
};

/// Throws ParseError (with line:column for syntax errors) on malformed input.
AlgebraDocument parse_algebra(std::string_view text);

/// Dense matrix as a JSON array of rows of rational strings.
Matrix parse_matrix(std::string_view text, std::size_t expected_dim);

/// Serializes with sparse structure entries in (i,j,k) order.
std::string write_algebra(const AlgebraDocument& doc);

/// Group implied by a kind hint (associative -> e, lie -> a3,
/// left-symmetric -> 12, lie-admissible -> s3).
std::optional<std::string> group_for_kind(const std::string& kind);

/// Runs one subcommand. args excludes the program name. Returns 0 when every
/// check passes, 1 on a failed check, 2 on usage or parse errors.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace homlie

#endif  // HOMLIE_CLI_HPP
