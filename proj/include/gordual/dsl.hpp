#pragma once

#include <string>
#include <vector>

#include "gordual/presentation.hpp"

namespace gordual {

/* Parsed input program: named rings and named modules over them.
 *
 * Grammar (whitespace-insensitive, '#' comments to end of line):
 *   ring-decl   := "ring" NAME "=" ("Fp"|"Zp") "(" PRIME ")" "[" gen-list? "]"
 *                  ("laurent" "[" gen-list "]")? ("formal" "[" gen-list "]")? ";"
 *   gen-list    := NAME ":" INT ("," NAME ":" INT)*
 *   module-decl := "module" NAME "over" NAME "{" ("gen" NAME ":" INT ";")+
 *                  ("rel" poly-expr ";")* "}"
 *   poly-expr   := ("-")? term (("+" | "-") term)*
 *   term        := factor ("*" factor)*
 *   factor      := INT ("^" INT)? | NAME ("^" INT)?
 * Every relation term names exactly one module generator; other factors are
 * ring generators and integer coefficients (read p-locally). */
struct DslProgram {
    struct NamedRing {
        std::string name;
        GradedRing ring;
    };
    struct NamedModule {
        std::string name;
        std::size_t ring_index;
        ModulePresentation pres;
    };
    std::vector<NamedRing> rings;
    std::vector<NamedModule> modules;

    const NamedRing* find_ring(const std::string& n) const {
        for (const auto& r : rings)
            if (r.name == n) return &r;
        return nullptr;
    }
    const NamedModule* find_module(const std::string& n) const {
        for (const auto& m : modules)
            if (m.name == n) return &m;
        return nullptr;
    }
};

namespace dsl_detail {

struct Token {
    enum class Kind { ident, number, punct, end };
    Kind kind;
    std::string text;
    long line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
        if (pos_ >= text_.size()) {
            tok_ = {Token::Kind::end, "", line_, col_};
            return;
        }
        long line = line_, col = col_;
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                s += text_[pos_++];
                ++col_;
            }
            tok_ = {Token::Kind::ident, s, line, col};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                s += text_[pos_++];
                ++col_;
            }
            tok_ = {Token::Kind::number, s, line, col};
        } else {
            tok_ = {Token::Kind::punct, std::string(1, c), line, col};
            ++pos_;
            ++col_;
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    long line_ = 1, col_ = 1;
    Token tok_{Token::Kind::end, "", 1, 1};
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    DslProgram parse() {
        DslProgram prog;
        while (lex_.peek().kind != Token::Kind::end) {
            if (lex_.peek().text == "ring")
                parse_ring(prog);
            else if (lex_.peek().text == "module")
                parse_module(prog);
            else
                fail("expected 'ring' or 'module'");
        }
        return prog;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = lex_.peek();
        throw SyntaxError(t.line, t.col, msg + (t.text.empty() ? "" : " near '" + t.text + "'"));
    }

    Token expect_punct(const std::string& p) {
        if (lex_.peek().kind != Token::Kind::punct || lex_.peek().text != p)
            fail("expected '" + p + "'");
        return lex_.next();
    }

    Token expect_ident() {
        if (lex_.peek().kind != Token::Kind::ident) fail("expected a name");
        return lex_.next();
    }

    Token expect_keyword(const std::string& k) {
        if (lex_.peek().kind != Token::Kind::ident || lex_.peek().text != k)
            fail("expected '" + k + "'");
        return lex_.next();
    }

    long expect_int() {
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::punct && lex_.peek().text == "-") {
            neg = true;
            lex_.next();
        }
        if (lex_.peek().kind != Token::Kind::number) fail("expected an integer");
        long v = std::stol(lex_.next().text);
        return neg ? -v : v;
    }

    bool peek_punct(const std::string& p) const {
        return lex_.peek().kind == Token::Kind::punct && lex_.peek().text == p;
    }

    std::vector<Generator> gen_list_brackets() {
        expect_punct("[");
        std::vector<Generator> gens;
        if (!peek_punct("]")) {
            while (true) {
                std::string name = expect_ident().text;
                expect_punct(":");
                long deg = expect_int();
                gens.push_back({name, deg});
                if (peek_punct(",")) {
                    lex_.next();
                    continue;
                }
                break;
            }
        }
        expect_punct("]");
        return gens;
    }

    void parse_ring(DslProgram& prog) {
        expect_keyword("ring");
        std::string name = expect_ident().text;
        if (prog.find_ring(name)) fail("ring '" + name + "' already declared");
        expect_punct("=");
        Token kind = expect_ident();
        if (kind.text != "Fp" && kind.text != "Zp")
            throw SyntaxError(kind.line, kind.col, "expected Fp or Zp, got '" + kind.text + "'");
        expect_punct("(");
        long p = expect_int();
        expect_punct(")");
        CoefficientRing coeff = kind.text == "Fp" ? CoefficientRing::prime_field(p)
                                                  : CoefficientRing::p_local(p);
        std::vector<Generator> gens = gen_list_brackets();
        std::vector<Generator> laurent, formal;
        while (lex_.peek().kind == Token::Kind::ident &&
               (lex_.peek().text == "laurent" || lex_.peek().text == "formal")) {
            bool is_laurent = lex_.next().text == "laurent";
            auto list = gen_list_brackets();
            auto& dst = is_laurent ? laurent : formal;
            dst.insert(dst.end(), list.begin(), list.end());
        }
        expect_punct(";");
        prog.rings.push_back({name, make_ring(coeff, gens, laurent, formal)});
    }

    void parse_module(DslProgram& prog) {
        expect_keyword("module");
        std::string name = expect_ident().text;
        if (prog.find_module(name)) fail("module '" + name + "' already declared");
        expect_keyword("over");
        std::string ring_name = expect_ident().text;
        const auto* named = prog.find_ring(ring_name);
        if (!named) fail("unknown ring '" + ring_name + "'");
        const GradedRing& ring = named->ring;
        if (!ring.computable()) fail("ring '" + ring_name + "' has symbolic-only generators");
        std::size_t ring_index = named - prog.rings.data();

        expect_punct("{");
        FreeModule ambient;
        while (lex_.peek().kind == Token::Kind::ident && lex_.peek().text == "gen") {
            lex_.next();
            std::string gname = expect_ident().text;
            for (const auto& existing : ambient.gen_names)
                if (existing == gname) fail("module generator '" + gname + "' already declared");
            expect_punct(":");
            long deg = expect_int();
            ambient.gen_names.push_back(gname);
            ambient.gen_degrees.push_back(deg);
            expect_punct(";");
        }
        if (ambient.rank() == 0) fail("module needs at least one generator");

        std::vector<Element> relations;
        while (lex_.peek().kind == Token::Kind::ident && lex_.peek().text == "rel") {
            Token rel_tok = lex_.next();
            Element rel = parse_poly(ring, ambient);
            expect_punct(";");
            if (!is_homogeneous(ring, ambient, rel))
                throw InhomogeneousRelationError("module " + name + ", relation at line " +
                                                 std::to_string(rel_tok.line));
            relations.push_back(std::move(rel));
        }
        expect_punct("}");
        prog.modules.push_back({name, ring_index, ModulePresentation{ambient, relations}});
    }

    Element parse_poly(const GradedRing& ring, const FreeModule& ambient) {
        std::vector<Term> terms;
        bool negative = false;
        if (peek_punct("-")) {
            lex_.next();
            negative = true;
        }
        while (true) {
            terms.push_back(parse_term(ring, ambient, negative));
            if (peek_punct("+")) {
                lex_.next();
                negative = false;
            } else if (peek_punct("-")) {
                lex_.next();
                negative = true;
            } else {
                break;
            }
        }
        return normalize_terms(ring, ambient, std::move(terms));
    }

    Term parse_term(const GradedRing& ring, const FreeModule& ambient, bool negative) {
        Rational coeff = negative ? -1 : 1;
        Monomial mono = Monomial::one(ring.var_count());
        std::optional<int> comp;
        while (true) {
            if (lex_.peek().kind == Token::Kind::number) {
                long base = expect_int();
                long exp = 1;
                if (peek_punct("^")) {
                    lex_.next();
                    exp = expect_int();
                    if (exp < 0) fail("negative exponent");
                }
                Rational f = 1;
                for (long i = 0; i < exp; ++i) f *= base;
                coeff *= f;
            } else if (lex_.peek().kind == Token::Kind::ident) {
                Token id = lex_.next();
                long exp = 1;
                if (peek_punct("^")) {
                    lex_.next();
                    exp = expect_int();
                    if (exp < 0) fail("negative exponent");
                }
                if (auto var = ring.find_var(id.text)) {
                    mono.exps[*var] += static_cast<int>(exp);
                } else {
                    int found = -1;
                    for (std::size_t g = 0; g < ambient.gen_names.size(); ++g)
                        if (ambient.gen_names[g] == id.text) found = static_cast<int>(g);
                    if (found < 0)
                        throw SyntaxError(id.line, id.col, "unknown name '" + id.text + "'");
                    if (comp)
                        throw SyntaxError(id.line, id.col,
                                          "term names two module generators");
                    if (exp != 1)
                        throw SyntaxError(id.line, id.col, "module generator with an exponent");
                    comp = found;
                }
            } else {
                fail("expected a factor");
            }
            if (peek_punct("*")) {
                lex_.next();
                continue;
            }
            break;
        }
        if (!comp) fail("relation term names no module generator");
        return Term{coeff, mono, *comp};
    }

    Lexer lex_;
};

}  // namespace dsl_detail

inline DslProgram parse_dsl(const std::string& text) {
    return dsl_detail::Parser(text).parse();
}

/* A single homogeneous ring element, e.g. "2" or "v1^2" or "x*y + 3*y^2".
 * Same factor syntax as relations, without module generators. */
inline Element parse_ring_element(const GradedRing& ring, const std::string& text) {
    dsl_detail::Lexer lex(text);
    using Token = dsl_detail::Token;
    auto fail = [&](const std::string& msg) -> void {
        const Token& t = lex.peek();
        throw SyntaxError(t.line, t.col, msg + (t.text.empty() ? "" : " near '" + t.text + "'"));
    };
    std::vector<std::pair<Rational, Monomial>> terms;
    bool negative = false;
    if (lex.peek().kind == Token::Kind::punct && lex.peek().text == "-") {
        lex.next();
        negative = true;
    }
    while (true) {
        Rational coeff = negative ? -1 : 1;
        Monomial mono = Monomial::one(ring.var_count());
        while (true) {
            if (lex.peek().kind == Token::Kind::number) {
                long base = std::stol(lex.next().text);
                long exp = 1;
                if (lex.peek().kind == Token::Kind::punct && lex.peek().text == "^") {
                    lex.next();
                    if (lex.peek().kind != Token::Kind::number) fail("expected an exponent");
                    exp = std::stol(lex.next().text);
                }
                for (long i = 0; i < exp; ++i) coeff *= base;
            } else if (lex.peek().kind == Token::Kind::ident) {
                Token id = lex.next();
                auto var = ring.find_var(id.text);
                if (!var) throw SyntaxError(id.line, id.col, "unknown variable '" + id.text + "'");
                long exp = 1;
                if (lex.peek().kind == Token::Kind::punct && lex.peek().text == "^") {
                    lex.next();
                    if (lex.peek().kind != Token::Kind::number) fail("expected an exponent");
                    exp = std::stol(lex.next().text);
                }
                mono.exps[*var] += static_cast<int>(exp);
            } else {
                fail("expected a factor");
            }
            if (lex.peek().kind == Token::Kind::punct && lex.peek().text == "*") {
                lex.next();
                continue;
            }
            break;
        }
        terms.push_back({coeff, mono});
        if (lex.peek().kind == Token::Kind::punct &&
            (lex.peek().text == "+" || lex.peek().text == "-")) {
            negative = lex.next().text == "-";
            continue;
        }
        break;
    }
    if (lex.peek().kind != Token::Kind::end) fail("trailing input");
    return ring_element(ring, std::move(terms));
}

}  // namespace gordual
