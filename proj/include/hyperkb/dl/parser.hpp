#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hyperkb/dl/ast.hpp"

namespace hyperkb::dl {

/// Lexical or grammatical error with a 1-based source position.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(std::string msg, int line_, int column_)
        : std::runtime_error(std::move(msg)), line(line_), column(column_) {}
};

/// Parses a knowledge-base document.  Declarations (`individual a, b.`,
/// `concept C.`, `role r.`) populate the vocabulary and must precede the
/// first use of a name; axioms land in their box automatically.
/// `#` starts a comment that runs to end of line.
KnowledgeBase parse_kb(const std::string& text);

/// Parses one axiom statement (trailing `.` optional) against an existing
/// vocabulary.  Used by callers that take axioms on the command line.
Axiom parse_axiom(const std::string& text, const Vocabulary& vocab);

/// Parses one concept expression against an existing vocabulary.
ConceptPtr parse_concept(const std::string& text, const Vocabulary& vocab);

/// A conjunctive query: ABox axiom templates whose individual slots may be
/// variables written `?name`.  Variables are listed in first-appearance
/// order; inside the atoms they are stored as `?`-prefixed individual names.
struct QueryPattern {
    std::vector<Axiom> atoms;
    std::vector<std::string> variables;
};

/// Parses a query pattern: one or more ABox statements, `.`-terminated.
QueryPattern parse_query_pattern(const std::string& text, const Vocabulary& vocab);

}  // namespace hyperkb::dl
