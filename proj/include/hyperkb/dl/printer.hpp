#pragma once

#include <string>

#include "hyperkb/dl/ast.hpp"

namespace hyperkb::dl {

std::string to_string(const Role& r);
std::string to_string(const ConceptExpr& c);
std::string to_string(const Axiom& ax);

/// Renders a knowledge base in the surface syntax: declarations first,
/// then ABox, TBox, and RBox statements in stored order.  The output
/// parses back to a structurally equal knowledge base.
std::string serialize_kb(const KnowledgeBase& kb);

}  // namespace hyperkb::dl
