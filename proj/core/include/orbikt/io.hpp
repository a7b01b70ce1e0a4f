#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orbikt/character.hpp"
#include "orbikt/complex.hpp"
#include "orbikt/crossed.hpp"

namespace orbikt {

/// Group file: `group <n>`, then `table` and n rows of n indices, or
/// `perm <k>` and one generator per line in image notation. Lines starting
/// with '#' are comments.
GroupPtr parse_group(std::string_view text, std::size_t max_order = kDefaultMaxOrder);

/// Builtin group spec: `cyclic <n>`, `dihedral <n>`, `trivial`, or
/// `product <spec> <spec>` (prefix notation; parentheses and commas ignored).
GroupPtr builtin_group(std::string_view spec, std::size_t max_order = kDefaultMaxOrder);

/// Complex file: `vertices <n>`, then `simplex v0 ... vk` lines for maximal
/// simplices and optional `act <element> : <images>` lines.
struct ComplexFile {
  SimplicialComplex complex;
  std::vector<std::pair<Element, std::vector<Vertex>>> generators;
};

ComplexFile parse_complex(std::string_view text);

/// Parses only `act` lines (a standalone action file).
std::vector<std::pair<Element, std::vector<Vertex>>> parse_action(std::string_view text);

/// Applies the generators to the complex; no generators means the trivial action.
GSimplicialComplex make_action(ComplexFile file, const GroupPtr& group);

std::string write_group(const FiniteGroup& g);
/// Maximal simplices plus `act` lines for a generating set of the group.
std::string write_complex(const GSimplicialComplex& x);

/// Filtration file: one line per step, `step: (stratum-id, irrep-id) ...`,
/// listing the nodes added at that step.
Filtration parse_filtration(std::string_view text);

/// Element list given as indices or names, separated by spaces or commas.
std::vector<Element> parse_elements(const FiniteGroup& g, const std::vector<std::string>& tokens);

std::string read_file(const std::string& path);

}  // namespace orbikt
