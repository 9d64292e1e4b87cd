#include "hyperkb/dl/printer.hpp"

#include <sstream>

namespace hyperkb::dl {

namespace {

bool atomic_concept(const ConceptExpr& c) {
    switch (c.kind) {
        case ConceptKind::Name:
        case ConceptKind::Top:
        case ConceptKind::Bottom:
        case ConceptKind::Nominal:
            return true;
        default:
            return false;
    }
}

// Quantifiers and cardinalities swallow everything to their right, so they
// get parenthesized whenever they appear as an operand.
bool greedy_tail(const ConceptExpr& c) {
    switch (c.kind) {
        case ConceptKind::Exists:
        case ConceptKind::Forall:
        case ConceptKind::Self:
        case ConceptKind::AtLeast:
        case ConceptKind::AtMost:
            return true;
        default:
            return false;
    }
}

int precedence(const ConceptExpr& c) {
    switch (c.kind) {
        case ConceptKind::Or: return 1;
        case ConceptKind::And: return 2;
        case ConceptKind::Not: return 3;
        default: return 4;
    }
}

void print_concept(std::ostream& os, const ConceptExpr& c, int min_prec, bool operand);

void print_child(std::ostream& os, const ConceptExpr& c, int min_prec) {
    bool parens = precedence(c) < min_prec || greedy_tail(c);
    if (parens) os << '(';
    print_concept(os, c, parens ? 1 : min_prec, !parens);
    if (parens) os << ')';
}

void print_concept(std::ostream& os, const ConceptExpr& c, int min_prec, bool operand) {
    (void)min_prec;
    (void)operand;
    switch (c.kind) {
        case ConceptKind::Name:
            os << c.name;
            break;
        case ConceptKind::Top:
            os << "Top";
            break;
        case ConceptKind::Bottom:
            os << "Bottom";
            break;
        case ConceptKind::Nominal: {
            os << '{';
            for (std::size_t i = 0; i < c.individuals.size(); ++i) {
                if (i) os << ", ";
                os << c.individuals[i];
            }
            os << '}';
            break;
        }
        case ConceptKind::Not:
            os << "not ";
            print_child(os, *c.lhs, 3);
            break;
        case ConceptKind::And:
            print_child(os, *c.lhs, 2);
            os << " and ";
            print_child(os, *c.rhs, 3);  // right operand must not be a lower-prec Or
            break;
        case ConceptKind::Or:
            print_child(os, *c.lhs, 1);
            os << " or ";
            print_child(os, *c.rhs, 2);
            break;
        case ConceptKind::Exists:
            os << "exists " << to_string(c.role) << " . ";
            print_concept(os, *c.lhs, 1, false);
            break;
        case ConceptKind::Forall:
            os << "forall " << to_string(c.role) << " . ";
            print_concept(os, *c.lhs, 1, false);
            break;
        case ConceptKind::Self:
            os << "exists " << to_string(c.role) << " . Self";
            break;
        case ConceptKind::AtLeast:
            os << ">= " << c.bound << ' ' << to_string(c.role) << " . ";
            print_concept(os, *c.lhs, 1, false);
            break;
        case ConceptKind::AtMost:
            os << "<= " << c.bound << ' ' << to_string(c.role) << " . ";
            print_concept(os, *c.lhs, 1, false);
            break;
    }
}

// A left-assoc And whose lhs is an And needs no parens; likewise Or.  But
// print_child parenthesizes equal precedence on the right only, handled by
// the min_prec arguments above.

void print_concept_top(std::ostream& os, const ConceptExpr& c) {
    if (greedy_tail(c) || atomic_concept(c) || c.kind == ConceptKind::Not ||
        c.kind == ConceptKind::And || c.kind == ConceptKind::Or) {
        print_concept(os, c, 1, false);
    } else {
        print_concept(os, c, 1, false);
    }
}

// Statement-level printing of a GCI side: a greedy-tail concept on the left
// of `<=` is safe (its body parse stops at `<=`), so no parens needed.
void print_gci_side(std::ostream& os, const ConceptExpr& c) { print_concept_top(os, c); }

}  // namespace

std::string to_string(const Role& r) {
    switch (r.kind) {
        case RoleKind::Named: return r.name;
        case RoleKind::Inverse: return r.name + "^-";
        case RoleKind::Universal: return "U";
    }
    return {};
}

std::string to_string(const ConceptExpr& c) {
    std::ostringstream os;
    print_concept_top(os, c);
    return os.str();
}

std::string to_string(const Axiom& ax) {
    std::ostringstream os;
    switch (ax.kind) {
        case AxiomKind::Ria: {
            for (std::size_t i = 0; i < ax.chain.size(); ++i) {
                if (i) os << " o ";
                os << to_string(ax.chain[i]);
            }
            os << " <= " << to_string(ax.role);
            break;
        }
        case AxiomKind::Sym: os << "Sym(" << to_string(ax.role) << ")"; break;
        case AxiomKind::Asy: os << "Asy(" << to_string(ax.role) << ")"; break;
        case AxiomKind::Tra: os << "Tra(" << to_string(ax.role) << ")"; break;
        case AxiomKind::Ref: os << "Ref(" << to_string(ax.role) << ")"; break;
        case AxiomKind::Irr: os << "Irr(" << to_string(ax.role) << ")"; break;
        case AxiomKind::Dis:
            os << "Dis(" << to_string(ax.role) << ", " << to_string(ax.role2) << ")";
            break;
        case AxiomKind::Gci:
            print_gci_side(os, *ax.c);
            os << " <= ";
            print_gci_side(os, *ax.d);
            break;
        case AxiomKind::ConceptAssert:
            if (atomic_concept(*ax.c)) {
                print_concept_top(os, *ax.c);
            } else {
                os << '(';
                print_concept_top(os, *ax.c);
                os << ')';
            }
            os << '(' << ax.a << ')';
            break;
        case AxiomKind::RoleAssert:
            os << to_string(ax.role) << '(' << ax.a << ", " << ax.b << ')';
            break;
        case AxiomKind::NegRoleAssert:
            os << '-' << to_string(ax.role) << '(' << ax.a << ", " << ax.b << ')';
            break;
        case AxiomKind::Eq: os << ax.a << " = " << ax.b; break;
        case AxiomKind::Neq: os << ax.a << " != " << ax.b; break;
    }
    return os.str();
}

std::string serialize_kb(const KnowledgeBase& kb) {
    std::ostringstream os;
    auto decl = [&](const char* kw, const std::set<std::string>& names) {
        if (names.empty()) return;
        os << kw << ' ';
        bool first = true;
        for (const auto& n : names) {
            if (!first) os << ", ";
            os << n;
            first = false;
        }
        os << " .\n";
    };
    decl("individual", kb.vocabulary.individuals);
    decl("concept", kb.vocabulary.concepts);
    decl("role", kb.vocabulary.roles);

    auto box = [&](const std::vector<Axiom>& axs) {
        if (axs.empty()) return;
        os << '\n';
        for (const auto& ax : axs) os << to_string(ax) << " .\n";
    };
    box(kb.abox);
    box(kb.tbox);
    box(kb.rbox);
    return os.str();
}

}  // namespace hyperkb::dl
