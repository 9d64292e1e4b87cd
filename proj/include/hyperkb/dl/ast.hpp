#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperkb::dl {

/// Names of individuals, concepts, and roles.  The three sets must be
/// pairwise disjoint; every name is a non-empty string over [A-Za-z0-9_-].
struct Vocabulary {
    std::set<std::string> individuals;
    std::set<std::string> concepts;
    std::set<std::string> roles;

    bool is_individual(const std::string& n) const { return individuals.count(n) != 0; }
    bool is_concept(const std::string& n) const { return concepts.count(n) != 0; }
    bool is_role(const std::string& n) const { return roles.count(n) != 0; }
    bool contains(const std::string& n) const {
        return is_individual(n) || is_concept(n) || is_role(n);
    }

    friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

/// True iff `n` is non-empty and drawn from [A-Za-z0-9_-].
bool is_valid_name(const std::string& n);

enum class RoleKind { Named, Inverse, Universal };

/// A role expression: a role name, an inverted role name, or the
/// universal role.
struct Role {
    RoleKind kind = RoleKind::Named;
    std::string name;  // empty for Universal

    static Role named(std::string n) { return {RoleKind::Named, std::move(n)}; }
    static Role inverse(std::string n) { return {RoleKind::Inverse, std::move(n)}; }
    static Role universal() { return {RoleKind::Universal, {}}; }

    bool is_universal() const { return kind == RoleKind::Universal; }

    friend bool operator==(const Role&, const Role&) = default;
    friend auto operator<=>(const Role&, const Role&) = default;
};

enum class ConceptKind {
    Name,
    Top,
    Bottom,
    Nominal,
    Not,
    And,
    Or,
    Exists,
    Forall,
    Self,
    AtLeast,
    AtMost,
};

struct ConceptExpr;
using ConceptPtr = std::shared_ptr<const ConceptExpr>;

/// A concept expression.  One node per constructor; children are shared
/// immutable subtrees.
struct ConceptExpr {
    ConceptKind kind = ConceptKind::Top;
    std::string name;                      // Name
    std::vector<std::string> individuals;  // Nominal, kept as written
    ConceptPtr lhs;                        // Not body, And/Or left, quantifier body
    ConceptPtr rhs;                        // And/Or right
    Role role;                             // Exists/Forall/Self/AtLeast/AtMost
    uint32_t bound = 0;                    // AtLeast/AtMost

    static ConceptPtr name_of(std::string n);
    static ConceptPtr top();
    static ConceptPtr bottom();
    static ConceptPtr nominal(std::vector<std::string> names);
    static ConceptPtr negation(ConceptPtr c);
    static ConceptPtr conj(ConceptPtr a, ConceptPtr b);
    static ConceptPtr disj(ConceptPtr a, ConceptPtr b);
    static ConceptPtr exists(Role r, ConceptPtr c);
    static ConceptPtr forall(Role r, ConceptPtr c);
    static ConceptPtr self(Role r);
    static ConceptPtr at_least(uint32_t n, Role r, ConceptPtr c);
    static ConceptPtr at_most(uint32_t n, Role r, ConceptPtr c);
};

/// Structural equality; nominal lists compare as sets.
bool equal(const ConceptExpr& a, const ConceptExpr& b);
bool equal(const ConceptPtr& a, const ConceptPtr& b);

enum class AxiomKind {
    Ria,            // chain ⊑ role
    Sym,
    Asy,
    Tra,
    Ref,
    Irr,
    Dis,            // role, role2
    Gci,            // c ⊑ d
    ConceptAssert,  // c(a)
    RoleAssert,     // role(a, b)
    NegRoleAssert,  // ¬role(a, b)
    Eq,             // a ≈ b
    Neq,            // a ≉ b
};

struct Axiom {
    AxiomKind kind = AxiomKind::Gci;
    std::vector<Role> chain;  // Ria left-hand side
    Role role;                // Ria super; characteristic operand; assertion role
    Role role2;               // Dis second operand
    ConceptPtr c;             // Gci lhs, ConceptAssert concept
    ConceptPtr d;             // Gci rhs
    std::string a;            // first individual
    std::string b;            // second individual

    static Axiom ria(std::vector<Role> chain, Role super);
    static Axiom characteristic(AxiomKind k, Role r);  // Sym/Asy/Tra/Ref/Irr
    static Axiom dis(Role r, Role s);
    static Axiom gci(ConceptPtr c, ConceptPtr d);
    static Axiom concept_assert(ConceptPtr c, std::string a);
    static Axiom role_assert(Role r, std::string a, std::string b);
    static Axiom neg_role_assert(Role r, std::string a, std::string b);
    static Axiom eq(std::string a, std::string b);
    static Axiom neq(std::string a, std::string b);
};

bool equal(const Axiom& a, const Axiom& b);

bool is_abox_kind(AxiomKind k);
bool is_tbox_kind(AxiomKind k);
bool is_rbox_kind(AxiomKind k);

/// A SROIQ knowledge base: the union of the three boxes plus its
/// vocabulary.  Axioms added through add() land in the right box.
struct KnowledgeBase {
    Vocabulary vocabulary;
    std::vector<Axiom> abox;
    std::vector<Axiom> tbox;
    std::vector<Axiom> rbox;

    void add(Axiom ax);
    std::vector<const Axiom*> all_axioms() const;
    std::size_t axiom_count() const { return abox.size() + tbox.size() + rbox.size(); }
};

bool equal(const KnowledgeBase& a, const KnowledgeBase& b);

enum class Simplicity { Simple, NonSimple };

/// Least fixpoint of: r is NonSimple if some RIA with super r (or r⁻) has a
/// chain of length >= 2 or a chain containing a NonSimple role.  The
/// universal role is always NonSimple; chains mentioning it taint their
/// super role.  Covers every role name in the vocabulary.
std::map<std::string, Simplicity> classify_simple_roles(const KnowledgeBase& kb);

struct Violation {
    std::string code;    // e.g. "non-simple-role", "universal-in-characteristic"
    std::string detail;  // human-readable location
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Structural well-formedness beyond what the grammar enforces: simple-role
/// constraints in Irr/Asy/Dis and in Self/AtLeast/AtMost positions, the
/// universal-role ban in role characteristics, and empty nominals.
/// Violations are data, not exceptions.
ValidationReport validate_kb(const KnowledgeBase& kb);

}  // namespace hyperkb::dl
