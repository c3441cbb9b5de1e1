#ifndef CDG_CLI_HPP
#define CDG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cdg/small_graph.hpp"

namespace cdg::cli {

/// Undirected DOT rendering: a `graph { ... }` block with one node statement
/// per vertex and one edge per line, both sorted. A labeled graph uses its
/// labels as node ids; an unlabeled graph numbers the vertices from 1.
std::string to_dot(const SmallGraph& g);

/// Runs one front-end invocation. args holds the words after the program
/// name. Results go to out; diagnostics go to err with stable "error:" /
/// "check-failed:" prefixes. Returns the process exit code: 0 success,
/// 1 usage or data error, 2 a check found a counterexample.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdg::cli

#endif  // CDG_CLI_HPP
