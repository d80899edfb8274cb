#ifndef KOSZULDUAL_IO_HPP
#define KOSZULDUAL_IO_HPP

#include <optional>
#include <string>

#include "koszuldual/presentation.hpp"

namespace koszuldual {

/// Reads the line-oriented `.quiver` format:
///
///   quiver <name>
///   field: Q | GF(<p>)
///   vertices: v1 v2 ...
///   arrows: a: u -> v ; b: v -> w
///   relations: a*b ; 2 c*d - 1/3 e*f
///
/// Keyword lines may repeat; a line without a keyword continues the previous
/// list. '#' starts a comment. Errors carry line and column.
/// A field given here overrides the one in the text.
QuadraticPresentation parse(const std::string& text, std::optional<Field> field_override = {});
QuadraticPresentation parse_file(const std::string& path, std::optional<Field> field_override = {});

/// Canonical text form; parse(serialize(a)) == a.
std::string serialize(const QuadraticPresentation& a);

/// Graphviz digraph: one solid edge per arrow, one dashed chord per relation
/// drawn from the start of its paths to their end.
std::string to_dot(const QuadraticPresentation& a);

/// "Q", "GF(7)" or "GF:7".
Field parse_field(const std::string& s);

}  // namespace koszuldual

#endif
