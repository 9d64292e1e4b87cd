#include "hyperkb/dl/ast.hpp"

#include <algorithm>

namespace hyperkb::dl {

bool is_valid_name(const std::string& n) {
    if (n.empty()) return false;
    return std::all_of(n.begin(), n.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '-';
    });
}

static ConceptPtr make(ConceptExpr e) { return std::make_shared<const ConceptExpr>(std::move(e)); }

ConceptPtr ConceptExpr::name_of(std::string n) {
    ConceptExpr e;
    e.kind = ConceptKind::Name;
    e.name = std::move(n);
    return make(std::move(e));
}

ConceptPtr ConceptExpr::top() {
    ConceptExpr e;
    e.kind = ConceptKind::Top;
    return make(std::move(e));
}

ConceptPtr ConceptExpr::bottom() {
    ConceptExpr e;
    e.kind = ConceptKind::Bottom;
    return make(std::move(e));
}

ConceptPtr ConceptExpr::nominal(std::vector<std::string> names) {
    ConceptExpr e;
    e.kind = ConceptKind::Nominal;
    e.individuals = std::move(names);
    return make(std::move(e));
}

ConceptPtr ConceptExpr::negation(ConceptPtr c) {
    ConceptExpr e;
    e.kind = ConceptKind::Not;
    e.lhs = std::move(c);
    return make(std::move(e));
}

ConceptPtr ConceptExpr::conj(ConceptPtr a, ConceptPtr b) {
    ConceptExpr e;
    e.kind = ConceptKind::And;
    e.lhs = std::move(a);
    e.rhs = std::move(b);
    return make(std::move(e));
}

ConceptPtr ConceptExpr::disj(ConceptPtr a, ConceptPtr b) {
    ConceptExpr e;
    e.kind = ConceptKind::Or;
    e.lhs = std::move(a);
    e.rhs = std::move(b);
    return make(std::move(e));
}

ConceptPtr ConceptExpr::exists(Role r, ConceptPtr c) {
    ConceptExpr e;
    e.kind = ConceptKind::Exists;
    e.role = std::move(r);
    e.lhs = std::move(c);
    return make(std::move(e));
}

ConceptPtr ConceptExpr::forall(Role r, ConceptPtr c) {
    ConceptExpr e;
    e.kind = ConceptKind::Forall;
    e.role = std::move(r);
    e.lhs = std::move(c);
    return make(std::move(e));
}

ConceptPtr ConceptExpr::self(Role r) {
    ConceptExpr e;
    e.kind = ConceptKind::Self;
    e.role = std::move(r);
    return make(std::move(e));
}

ConceptPtr ConceptExpr::at_least(uint32_t n, Role r, ConceptPtr c) {
    ConceptExpr e;
    e.kind = ConceptKind::AtLeast;
    e.bound = n;
    e.role = std::move(r);
    e.lhs = std::move(c);
    return make(std::move(e));
}

ConceptPtr ConceptExpr::at_most(uint32_t n, Role r, ConceptPtr c) {
    ConceptExpr e;
    e.kind = ConceptKind::AtMost;
    e.bound = n;
    e.role = std::move(r);
    e.lhs = std::move(c);
    return make(std::move(e));
}

bool equal(const ConceptPtr& a, const ConceptPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return equal(*a, *b);
}

bool equal(const ConceptExpr& a, const ConceptExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ConceptKind::Name:
            return a.name == b.name;
        case ConceptKind::Top:
        case ConceptKind::Bottom:
            return true;
        case ConceptKind::Nominal: {
            // written order is irrelevant
            std::set<std::string> sa(a.individuals.begin(), a.individuals.end());
            std::set<std::string> sb(b.individuals.begin(), b.individuals.end());
            return sa == sb;
        }
        case ConceptKind::Not:
            return equal(a.lhs, b.lhs);
        case ConceptKind::And:
        case ConceptKind::Or:
            return equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
        case ConceptKind::Exists:
        case ConceptKind::Forall:
            return a.role == b.role && equal(a.lhs, b.lhs);
        case ConceptKind::Self:
            return a.role == b.role;
        case ConceptKind::AtLeast:
        case ConceptKind::AtMost:
            return a.bound == b.bound && a.role == b.role && equal(a.lhs, b.lhs);
    }
    return false;
}

Axiom Axiom::ria(std::vector<Role> chain, Role super) {
    Axiom ax;
    ax.kind = AxiomKind::Ria;
    ax.chain = std::move(chain);
    ax.role = std::move(super);
    return ax;
}

Axiom Axiom::characteristic(AxiomKind k, Role r) {
    Axiom ax;
    ax.kind = k;
    ax.role = std::move(r);
    return ax;
}

Axiom Axiom::dis(Role r, Role s) {
    Axiom ax;
    ax.kind = AxiomKind::Dis;
    ax.role = std::move(r);
    ax.role2 = std::move(s);
    return ax;
}

Axiom Axiom::gci(ConceptPtr c, ConceptPtr d) {
    Axiom ax;
    ax.kind = AxiomKind::Gci;
    ax.c = std::move(c);
    ax.d = std::move(d);
    return ax;
}

Axiom Axiom::concept_assert(ConceptPtr c, std::string a) {
    Axiom ax;
    ax.kind = AxiomKind::ConceptAssert;
    ax.c = std::move(c);
    ax.a = std::move(a);
    return ax;
}

Axiom Axiom::role_assert(Role r, std::string a, std::string b) {
    Axiom ax;
    ax.kind = AxiomKind::RoleAssert;
    ax.role = std::move(r);
    ax.a = std::move(a);
    ax.b = std::move(b);
    return ax;
}

Axiom Axiom::neg_role_assert(Role r, std::string a, std::string b) {
    Axiom ax = role_assert(std::move(r), std::move(a), std::move(b));
    ax.kind = AxiomKind::NegRoleAssert;
    return ax;
}

Axiom Axiom::eq(std::string a, std::string b) {
    Axiom ax;
    ax.kind = AxiomKind::Eq;
    ax.a = std::move(a);
    ax.b = std::move(b);
    return ax;
}

Axiom Axiom::neq(std::string a, std::string b) {
    Axiom ax = eq(std::move(a), std::move(b));
    ax.kind = AxiomKind::Neq;
    return ax;
}

bool equal(const Axiom& a, const Axiom& b) {
    if (a.kind != b.kind) return false;
    if (a.chain != b.chain || a.role != b.role || a.role2 != b.role2) return false;
    if (a.a != b.a || a.b != b.b) return false;
    if ((a.c == nullptr) != (b.c == nullptr) || (a.d == nullptr) != (b.d == nullptr)) return false;
    if (a.c && !equal(a.c, b.c)) return false;
    if (a.d && !equal(a.d, b.d)) return false;
    return true;
}

bool is_abox_kind(AxiomKind k) {
    switch (k) {
        case AxiomKind::ConceptAssert:
        case AxiomKind::RoleAssert:
        case AxiomKind::NegRoleAssert:
        case AxiomKind::Eq:
        case AxiomKind::Neq:
            return true;
        default:
            return false;
    }
}

bool is_tbox_kind(AxiomKind k) { return k == AxiomKind::Gci; }

bool is_rbox_kind(AxiomKind k) { return !is_abox_kind(k) && !is_tbox_kind(k); }

void KnowledgeBase::add(Axiom ax) {
    if (is_abox_kind(ax.kind)) {
        abox.push_back(std::move(ax));
    } else if (is_tbox_kind(ax.kind)) {
        tbox.push_back(std::move(ax));
    } else {
        rbox.push_back(std::move(ax));
    }
}

std::vector<const Axiom*> KnowledgeBase::all_axioms() const {
    std::vector<const Axiom*> out;
    out.reserve(axiom_count());
    for (const auto& ax : abox) out.push_back(&ax);
    for (const auto& ax : tbox) out.push_back(&ax);
    for (const auto& ax : rbox) out.push_back(&ax);
    return out;
}

bool equal(const KnowledgeBase& a, const KnowledgeBase& b) {
    if (a.vocabulary != b.vocabulary) return false;
    auto boxes_equal = [](const std::vector<Axiom>& x, const std::vector<Axiom>& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!equal(x[i], y[i])) return false;
        return true;
    };
    return boxes_equal(a.abox, b.abox) && boxes_equal(a.tbox, b.tbox) &&
           boxes_equal(a.rbox, b.rbox);
}

std::map<std::string, Simplicity> classify_simple_roles(const KnowledgeBase& kb) {
    std::map<std::string, Simplicity> out;
    for (const auto& r : kb.vocabulary.roles) out[r] = Simplicity::Simple;

    auto non_simple = [&](const Role& r) {
        if (r.kind == RoleKind::Universal) return true;
        auto it = out.find(r.name);
        return it != out.end() && it->second == Simplicity::NonSimple;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& ax : kb.rbox) {
            if (ax.kind != AxiomKind::Ria) continue;
            if (ax.role.kind == RoleKind::Universal) continue;  // u has no name slot
            bool tainted = ax.chain.size() >= 2;
            for (const auto& r : ax.chain) tainted = tainted || non_simple(r);
            if (tainted && out[ax.role.name] != Simplicity::NonSimple) {
                out[ax.role.name] = Simplicity::NonSimple;
                changed = true;
            }
        }
    }
    return out;
}

namespace {

void collect_concept_violations(const ConceptExpr& c,
                                const std::map<std::string, Simplicity>& simplicity,
                                ValidationReport& report, const std::string& where) {
    auto check_simple = [&](const Role& r, const char* ctor) {
        if (r.kind == RoleKind::Universal) {
            report.violations.push_back(
                {"non-simple-role", std::string(ctor) + " over the universal role in " + where});
            return;
        }
        auto it = simplicity.find(r.name);
        if (it != simplicity.end() && it->second == Simplicity::NonSimple) {
            report.violations.push_back(
                {"non-simple-role", std::string(ctor) + " over non-simple role '" + r.name +
                                        "' in " + where});
        }
    };

    switch (c.kind) {
        case ConceptKind::Nominal:
            if (c.individuals.empty())
                report.violations.push_back({"empty-nominal", "empty nominal in " + where});
            break;
        case ConceptKind::Self:
            check_simple(c.role, "Self");
            break;
        case ConceptKind::AtLeast:
            check_simple(c.role, "at-least restriction");
            break;
        case ConceptKind::AtMost:
            check_simple(c.role, "at-most restriction");
            break;
        default:
            break;
    }
    if (c.lhs) collect_concept_violations(*c.lhs, simplicity, report, where);
    if (c.rhs) collect_concept_violations(*c.rhs, simplicity, report, where);
}

}  // namespace

ValidationReport validate_kb(const KnowledgeBase& kb) {
    ValidationReport report;
    auto simplicity = classify_simple_roles(kb);

    auto require_simple = [&](const Role& r, const std::string& where) {
        if (r.kind == RoleKind::Universal) return;  // reported separately
        auto it = simplicity.find(r.name);
        if (it != simplicity.end() && it->second == Simplicity::NonSimple) {
            report.violations.push_back(
                {"non-simple-role", "non-simple role '" + r.name + "' in " + where});
        }
    };
    auto ban_universal = [&](const Role& r, const std::string& where) {
        if (r.kind == RoleKind::Universal) {
            report.violations.push_back(
                {"universal-in-characteristic", "universal role in " + where});
        }
    };

    int idx = 0;
    for (const auto& ax : kb.rbox) {
        ++idx;
        std::string where = "rbox axiom " + std::to_string(idx);
        switch (ax.kind) {
            case AxiomKind::Sym:
            case AxiomKind::Tra:
            case AxiomKind::Ref:
                ban_universal(ax.role, where);
                break;
            case AxiomKind::Asy:
            case AxiomKind::Irr:
                ban_universal(ax.role, where);
                require_simple(ax.role, where);
                break;
            case AxiomKind::Dis:
                ban_universal(ax.role, where);
                ban_universal(ax.role2, where);
                require_simple(ax.role, where);
                require_simple(ax.role2, where);
                break;
            default:
                break;
        }
    }

    auto walk_box = [&](const std::vector<Axiom>& box, const char* label) {
        int i = 0;
        for (const auto& ax : box) {
            ++i;
            std::string where = std::string(label) + " axiom " + std::to_string(i);
            if (ax.c) collect_concept_violations(*ax.c, simplicity, report, where);
            if (ax.d) collect_concept_violations(*ax.d, simplicity, report, where);
        }
    };
    walk_box(kb.abox, "abox");
    walk_box(kb.tbox, "tbox");
    return report;
}

}  // namespace hyperkb::dl
