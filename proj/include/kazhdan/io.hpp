#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kazhdan/graph_of_groups.hpp"
#include "kazhdan/invariants.hpp"
#include "kazhdan/words.hpp"

namespace kazhdan {

/// Parsed CLI input file: the graph of groups plus optional explicit orbit
/// data for the general-degree mode.
struct InputDocument {
  GraphOfGroups graph;
  std::optional<OrbitComplex> orbits;
};

InputDocument load_input(const std::string& path);
InputDocument parse_input_text(const std::string& text, const std::string& origin);

/// Parses a word as a JSON array of letters {"v": vertexId, "e": index} and
/// {"t": +1/-1}, e.g. [{"v":"v1","e":2},{"t":-1}].
std::vector<Letter> parse_word_text(const std::string& text, const ValidatedGraph& g);

/// Human rendering of a formal K-class, e.g.
/// "[p_1] = [rho(v1,{e,s2})] - [rho(v1,Z4)] - [rho(v2,Z6)]".
std::string render_kclass(const ValidatedGraph& g, const FormalKClass& k, int degree = 1);

/// Exit codes: 0 success, 2 validation/usage error, 3 amenable input
/// refused, 4 oracle verification failure, 5 undecided trace membership.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kazhdan
