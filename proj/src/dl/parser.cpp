#include "hyperkb/dl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>

namespace hyperkb::dl {

namespace {

enum class Tok {
    Word,     // names, numbers, keywords
    Dot,
    Comma,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Eq,       // =
    Neq,      // !=
    Leq,      // <=
    Geq,      // >=
    Caret,    // ^
    Minus,    // -
    Question, // ? (query variables)
    End,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            if (pos_ >= src_.size()) break;
            int line = line_, col = col_;
            char c = src_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                out.push_back({Tok::Word, word(), line, col});
                continue;
            }
            switch (c) {
                case '.': out.push_back({Tok::Dot, ".", line, col}); advance(); break;
                case ',': out.push_back({Tok::Comma, ",", line, col}); advance(); break;
                case '(': out.push_back({Tok::LParen, "(", line, col}); advance(); break;
                case ')': out.push_back({Tok::RParen, ")", line, col}); advance(); break;
                case '{': out.push_back({Tok::LBrace, "{", line, col}); advance(); break;
                case '}': out.push_back({Tok::RBrace, "}", line, col}); advance(); break;
                case '^': out.push_back({Tok::Caret, "^", line, col}); advance(); break;
                case '-': out.push_back({Tok::Minus, "-", line, col}); advance(); break;
                case '?': out.push_back({Tok::Question, "?", line, col}); advance(); break;
                case '=': out.push_back({Tok::Eq, "=", line, col}); advance(); break;
                case '!':
                    advance();
                    if (pos_ < src_.size() && src_[pos_] == '=') {
                        advance();
                        out.push_back({Tok::Neq, "!=", line, col});
                    } else {
                        throw ParseError("expected '=' after '!'", line, col);
                    }
                    break;
                case '<':
                    advance();
                    if (pos_ < src_.size() && src_[pos_] == '=') {
                        advance();
                        out.push_back({Tok::Leq, "<=", line, col});
                    } else {
                        throw ParseError("expected '=' after '<'", line, col);
                    }
                    break;
                case '>':
                    advance();
                    if (pos_ < src_.size() && src_[pos_] == '=') {
                        advance();
                        out.push_back({Tok::Geq, ">=", line, col});
                    } else {
                        throw ParseError("expected '=' after '>'", line, col);
                    }
                    break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
            }
        }
        out.push_back({Tok::End, "", line_, col_});
        return out;
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    // identifiers and numbers: start alnum/underscore, continue with '-' too
    std::string word() {
        std::string w;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
                w += c;
                advance();
            } else {
                break;
            }
        }
        return w;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

const char* kReserved[] = {"individual", "concept", "role", "not", "and", "or",
                           "exists",     "forall",  "o",    "Top", "Bottom",
                           "Self",       "U",       "Sym",  "Asy", "Tra",
                           "Ref",        "Irr",     "Dis"};

bool is_reserved(const std::string& w) {
    for (const char* r : kReserved)
        if (w == r) return true;
    return false;
}

class Parser {
public:
    Parser(std::vector<Token> toks, Vocabulary vocab, bool allow_vars)
        : toks_(std::move(toks)), vocab_(std::move(vocab)), allow_vars_(allow_vars) {}

    KnowledgeBase parse_document() {
        KnowledgeBase kb;
        kb.vocabulary = std::move(vocab_);
        while (!at(Tok::End)) {
            if (at_word("individual") || at_word("concept") || at_word("role")) {
                parse_declaration(kb.vocabulary);
            } else {
                kb.add(parse_statement());
            }
        }
        vocab_ = kb.vocabulary;
        return kb;
    }

    Axiom parse_single_axiom() {
        Axiom ax = parse_statement_body();
        if (at(Tok::Dot)) next();
        expect(Tok::End, "end of input");
        return ax;
    }

    ConceptPtr parse_single_concept() {
        ConceptPtr c = parse_concept_expr();
        if (at(Tok::Dot)) next();
        expect(Tok::End, "end of input");
        return c;
    }

    QueryPattern parse_pattern() {
        QueryPattern q;
        vars_ = &q.variables;
        while (!at(Tok::End)) {
            Axiom ax = parse_statement_body();
            if (!is_abox_kind(ax.kind))
                throw ParseError("query atoms must be ABox statements", cur().line, cur().col);
            q.atoms.push_back(std::move(ax));
            expect(Tok::Dot, "'.'");
        }
        return q;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    const Token& peek(std::size_t k = 1) const {
        return toks_[std::min(i_ + k, toks_.size() - 1)];
    }
    void next() { ++i_; }
    bool at(Tok k) const { return cur().kind == k; }
    bool at_word(const char* w) const { return at(Tok::Word) && cur().text == w; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, cur().line, cur().col);
    }

    void expect(Tok k, const char* what) {
        if (!at(k)) fail(std::string("expected ") + what);
        if (k != Tok::End) next();
    }

    std::string expect_name() {
        if (!at(Tok::Word)) fail("expected a name");
        std::string n = cur().text;
        if (is_reserved(n)) fail("'" + n + "' is a reserved word");
        next();
        return n;
    }

    void parse_declaration(Vocabulary& vocab) {
        std::string which = cur().text;
        next();
        while (true) {
            const Token& tok = cur();
            std::string n = expect_name();
            if (!is_valid_name(n)) throw ParseError("invalid name '" + n + "'", tok.line, tok.col);
            bool dup_elsewhere =
                (which == "individual" && (vocab.is_concept(n) || vocab.is_role(n))) ||
                (which == "concept" && (vocab.is_individual(n) || vocab.is_role(n))) ||
                (which == "role" && (vocab.is_individual(n) || vocab.is_concept(n)));
            if (dup_elsewhere)
                throw ParseError("name '" + n + "' already declared in another vocabulary set",
                                 tok.line, tok.col);
            if (which == "individual") vocab.individuals.insert(n);
            else if (which == "concept") vocab.concepts.insert(n);
            else vocab.roles.insert(n);
            if (at(Tok::Comma)) {
                next();
                continue;
            }
            break;
        }
        expect(Tok::Dot, "'.'");
    }

    Axiom parse_statement() {
        Axiom ax = parse_statement_body();
        expect(Tok::Dot, "'.'");
        return ax;
    }

    // one axiom, not consuming the trailing '.'
    Axiom parse_statement_body() {
        // role characteristics
        if (at(Tok::Word) && peek().kind == Tok::LParen) {
            const std::string& w = cur().text;
            if (w == "Sym" || w == "Asy" || w == "Tra" || w == "Ref" || w == "Irr")
                return parse_characteristic(w);
            if (w == "Dis") return parse_dis();
        }
        // negated role assertion
        if (at(Tok::Minus)) {
            next();
            Role r = parse_role();
            expect(Tok::LParen, "'('");
            std::string a = expect_individual();
            expect(Tok::Comma, "','");
            std::string b = expect_individual();
            expect(Tok::RParen, "')'");
            return Axiom::neg_role_assert(std::move(r), std::move(a), std::move(b));
        }
        // dispatch on the declared kind of the first name
        if (at(Tok::Word) || at(Tok::Question)) {
            if (at(Tok::Question) ||
                (vocab_.is_individual(cur().text) && !is_reserved(cur().text))) {
                std::string a = expect_individual();
                if (at(Tok::Eq)) {
                    next();
                    return Axiom::eq(std::move(a), expect_individual());
                }
                if (at(Tok::Neq)) {
                    next();
                    return Axiom::neq(std::move(a), expect_individual());
                }
                fail("expected '=' or '!=' after individual name");
            }
            if ((vocab_.is_role(cur().text) && !is_reserved(cur().text)) || at_word("U")) {
                return parse_role_statement();
            }
        }
        // otherwise: a concept statement (GCI or concept assertion)
        ConceptPtr c = parse_concept_expr();
        if (at(Tok::Leq)) {
            next();
            return Axiom::gci(std::move(c), parse_concept_expr());
        }
        if (at(Tok::LParen)) {
            next();
            std::string a = expect_individual();
            expect(Tok::RParen, "')'");
            return Axiom::concept_assert(std::move(c), std::move(a));
        }
        fail("expected '<=' or '(individual)' after concept expression");
    }

    Axiom parse_characteristic(const std::string& which) {
        next();  // keyword
        expect(Tok::LParen, "'('");
        Role r = parse_role();
        expect(Tok::RParen, "')'");
        AxiomKind k = which == "Sym"   ? AxiomKind::Sym
                      : which == "Asy" ? AxiomKind::Asy
                      : which == "Tra" ? AxiomKind::Tra
                      : which == "Ref" ? AxiomKind::Ref
                                       : AxiomKind::Irr;
        return Axiom::characteristic(k, std::move(r));
    }

    Axiom parse_dis() {
        next();
        expect(Tok::LParen, "'('");
        Role r = parse_role();
        expect(Tok::Comma, "','");
        Role s = parse_role();
        expect(Tok::RParen, "')'");
        return Axiom::dis(std::move(r), std::move(s));
    }

    // `r(a,b)` or `r1 o r2 <= r`
    Axiom parse_role_statement() {
        Role first = parse_role();
        if (at(Tok::LParen)) {
            next();
            std::string a = expect_individual();
            expect(Tok::Comma, "','");
            std::string b = expect_individual();
            expect(Tok::RParen, "')'");
            return Axiom::role_assert(std::move(first), std::move(a), std::move(b));
        }
        std::vector<Role> chain{std::move(first)};
        while (at_word("o")) {
            next();
            chain.push_back(parse_role());
        }
        expect(Tok::Leq, "'o' or '<='");
        Role super = parse_role();
        return Axiom::ria(std::move(chain), std::move(super));
    }

    Role parse_role() {
        if (at_word("U")) {
            next();
            return Role::universal();
        }
        const Token& tok = cur();
        std::string n = expect_name();
        if (!vocab_.is_role(n))
            throw ParseError("undeclared role '" + n + "'", tok.line, tok.col);
        if (at(Tok::Caret)) {
            next();
            if (!at(Tok::Minus)) fail("expected '-' after '^'");
            next();
            return Role::inverse(std::move(n));
        }
        return Role::named(std::move(n));
    }

    std::string expect_individual() {
        if (allow_vars_ && at(Tok::Question)) {
            next();
            if (!at(Tok::Word)) fail("expected variable name after '?'");
            std::string v = "?" + cur().text;
            next();
            if (vars_ && std::find(vars_->begin(), vars_->end(), v) == vars_->end())
                vars_->push_back(v);
            return v;
        }
        const Token& tok = cur();
        std::string n = expect_name();
        if (!vocab_.is_individual(n))
            throw ParseError("undeclared individual '" + n + "'", tok.line, tok.col);
        return n;
    }

    // precedence: not > and > or; quantifier bodies extend greedily
    ConceptPtr parse_concept_expr() { return parse_or(); }

    ConceptPtr parse_or() {
        ConceptPtr lhs = parse_and();
        while (at_word("or")) {
            next();
            lhs = ConceptExpr::disj(std::move(lhs), parse_and());
        }
        return lhs;
    }

    ConceptPtr parse_and() {
        ConceptPtr lhs = parse_not();
        while (at_word("and")) {
            next();
            lhs = ConceptExpr::conj(std::move(lhs), parse_not());
        }
        return lhs;
    }

    ConceptPtr parse_not() {
        if (at_word("not")) {
            next();
            return ConceptExpr::negation(parse_not());
        }
        return parse_primary();
    }

    ConceptPtr parse_primary() {
        if (at_word("Top")) {
            next();
            return ConceptExpr::top();
        }
        if (at_word("Bottom")) {
            next();
            return ConceptExpr::bottom();
        }
        if (at(Tok::LBrace)) return parse_nominal();
        if (at(Tok::LParen)) {
            next();
            ConceptPtr c = parse_concept_expr();
            expect(Tok::RParen, "')'");
            return c;
        }
        if (at_word("exists") || at_word("forall")) return parse_quantifier();
        if (at(Tok::Geq) || at(Tok::Leq)) return parse_cardinality();
        const Token& tok = cur();
        std::string n = expect_name();
        if (!vocab_.is_concept(n))
            throw ParseError("undeclared concept '" + n + "'", tok.line, tok.col);
        return ConceptExpr::name_of(std::move(n));
    }

    ConceptPtr parse_nominal() {
        next();  // '{'
        std::vector<std::string> names;
        if (at(Tok::RBrace)) fail("nominal must list at least one individual");
        while (true) {
            names.push_back(expect_individual());
            if (at(Tok::Comma)) {
                next();
                continue;
            }
            break;
        }
        expect(Tok::RBrace, "'}'");
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = i + 1; j < names.size(); ++j)
                if (names[i] == names[j]) fail("duplicate individual in nominal");
        return ConceptExpr::nominal(std::move(names));
    }

    ConceptPtr parse_quantifier() {
        bool existential = cur().text == "exists";
        next();
        Role r = parse_role();
        expect(Tok::Dot, "'.'");
        if (existential && at_word("Self")) {
            next();
            return ConceptExpr::self(std::move(r));
        }
        ConceptPtr body = parse_concept_expr();  // greedy
        return existential ? ConceptExpr::exists(std::move(r), std::move(body))
                           : ConceptExpr::forall(std::move(r), std::move(body));
    }

    ConceptPtr parse_cardinality() {
        bool at_least = at(Tok::Geq);
        next();
        if (!at(Tok::Word)) fail("expected a nonnegative integer");
        const std::string& num = cur().text;
        for (char c : num)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail("expected a nonnegative integer");
        uint32_t n = static_cast<uint32_t>(std::strtoul(num.c_str(), nullptr, 10));
        next();
        Role r = parse_role();
        expect(Tok::Dot, "'.'");
        ConceptPtr body = parse_concept_expr();
        return at_least ? ConceptExpr::at_least(n, std::move(r), std::move(body))
                        : ConceptExpr::at_most(n, std::move(r), std::move(body));
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    Vocabulary vocab_;
    bool allow_vars_;
    std::vector<std::string>* vars_ = nullptr;
};

}  // namespace

KnowledgeBase parse_kb(const std::string& text) {
    Parser p(Lexer(text).run(), Vocabulary{}, false);
    return p.parse_document();
}

Axiom parse_axiom(const std::string& text, const Vocabulary& vocab) {
    Parser p(Lexer(text).run(), vocab, false);
    return p.parse_single_axiom();
}

ConceptPtr parse_concept(const std::string& text, const Vocabulary& vocab) {
    Parser p(Lexer(text).run(), vocab, false);
    return p.parse_single_concept();
}

QueryPattern parse_query_pattern(const std::string& text, const Vocabulary& vocab) {
    Parser p(Lexer(text).run(), vocab, true);
    return p.parse_pattern();
}

}  // namespace hyperkb::dl
