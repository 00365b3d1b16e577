#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mbs/core.hpp"

namespace mbs {

/// Line format:
///   mbs <name>
///   branch <id>
///   sector <id> genus <g> [nonorientable]
///   prebranch <sector-id> <branch-id> <od>
/// Identifiers are [A-Za-z0-9_]+. '#' starts a comment. A document holds one
/// or more surfaces, each opened by an `mbs` line; a document with no header
/// holds one unnamed surface.
std::vector<MultibranchedSurface> parse_document(std::string_view text);

/// Exactly one surface expected; otherwise SemanticError.
MultibranchedSurface parse_surface(std::string_view text);

std::string serialize(const MultibranchedSurface& surface);
std::string serialize(const std::vector<MultibranchedSurface>& surfaces);

}  // namespace mbs
