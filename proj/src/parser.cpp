#include "gdlog/parser.hpp"

#include "gdlog/printer.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace gdlog {

namespace {

enum class Tok {
    Ident,
    Number,
    Quoted,
    LParen,
    RParen,
    LAngle,
    RAngle,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Arrow,
    Question,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourceSpan span;
};

class Lexer {
  public:
    Lexer(const std::string &text, std::string file) : text_(text), file_(std::move(file)) {}

    Token next() {
        skipTrivia();
        Token tok;
        tok.span.file = file_;
        tok.span.line = line_;
        tok.span.colStart = col_;
        if (pos_ >= text_.size()) {
            tok.kind = Tok::End;
            tok.span.colEnd = col_;
            return tok;
        }
        char c = text_[pos_];
        if (c == '(') return punct(tok, Tok::LParen);
        if (c == ')') return punct(tok, Tok::RParen);
        if (c == '<') return punct(tok, Tok::LAngle);
        if (c == '>') return punct(tok, Tok::RAngle);
        if (c == '[') return punct(tok, Tok::LBracket);
        if (c == ']') return punct(tok, Tok::RBracket);
        if (c == ',') return punct(tok, Tok::Comma);
        if (c == '.') {
            // A dot between digits belongs to a decimal literal; handled below.
            return punct(tok, Tok::Dot);
        }
        if (c == '?') return punct(tok, Tok::Question);
        if (c == '-') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                advance();
                advance();
                tok.kind = Tok::Arrow;
                tok.text = "->";
                tok.span.colEnd = col_ - 1;
                return tok;
            }
            if (pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))
                return number(tok);
            throw ParseError("unexpected character '-'", spanHere());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number(tok);
        if (c == '"') return quoted(tok);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident(tok);
        throw ParseError(std::string("unexpected character '") + c + "'", spanHere());
    }

  private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skipTrivia() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    SourceSpan spanHere() const { return SourceSpan{file_, line_, col_, col_}; }

    Token punct(Token tok, Tok kind) {
        tok.kind = kind;
        tok.text = text_[pos_];
        advance();
        tok.span.colEnd = tok.span.colStart;
        return tok;
    }

    Token number(Token tok) {
        std::size_t start = pos_;
        if (text_[pos_] == '-') advance();
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
        if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            advance();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
        } else if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            advance();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
        }
        tok.kind = Tok::Number;
        tok.text = text_.substr(start, pos_ - start);
        tok.span.colEnd = col_ - 1;
        return tok;
    }

    Token quoted(Token tok) {
        advance(); // opening quote
        std::string value;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            value += text_[pos_];
            advance();
        }
        if (pos_ >= text_.size()) throw ParseError("unterminated string literal", tok.span);
        advance(); // closing quote
        tok.kind = Tok::Quoted;
        tok.text = std::move(value);
        tok.span.colEnd = col_ - 1;
        return tok;
    }

    Token ident(Token tok) {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            advance();
        tok.kind = Tok::Ident;
        tok.text = text_.substr(start, pos_ - start);
        tok.span.colEnd = col_ - 1;
        return tok;
    }

    const std::string &text_;
    std::string file_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
  public:
    Parser(const std::string &text, const DistributionRegistry *registry, std::string file,
           bool allowReserved)
        : lexer_(text, file), registry_(registry), allowReserved_(allowReserved) {
        cur_ = lexer_.next();
        nextPeek_ = lexer_.next();
    }

    GProgram program() {
        GProgram prog;
        while (cur_.kind != Tok::End) prog.rules.push_back(rule());
        return prog;
    }

    Database database() {
        Database db;
        while (cur_.kind != Tok::End) {
            Token at = cur_;
            Atom a = atom();
            expect(Tok::Dot, "'.'");
            if (!a.ground()) throw ParseError("database facts must be ground", at.span);
            std::vector<ConstId> args;
            for (const Term &t : a.args) args.push_back(std::get<ConstId>(t));
            db.facts.push_back(Interner::instance().internAtom(a.pred, std::move(args)));
        }
        return db;
    }

    std::vector<GRuleId> groundRules() {
        std::vector<GRuleId> rules;
        while (cur_.kind != Tok::End) {
            Token at = cur_;
            GRule r = ruleOnly();
            if (!r.head) throw ParseError("'false' heads are not allowed in ground rule files", at.span);
            std::vector<GAtomId> pos, neg;
            auto groundAtomId = [&](const Atom &a) {
                if (!a.ground()) throw ParseError("rule must be ground", at.span);
                std::vector<ConstId> args;
                for (const Term &t : a.args) args.push_back(std::get<ConstId>(t));
                return Interner::instance().internAtom(a.pred, std::move(args));
            };
            for (const Atom &a : r.pos) pos.push_back(groundAtomId(a));
            for (const Atom &a : r.neg) neg.push_back(groundAtomId(a));
            Atom headAtom;
            headAtom.pred = r.head->pred;
            for (const HeadArg &arg : r.head->args) {
                if (!std::holds_alternative<Term>(arg))
                    throw ParseError("delta terms are not allowed in ground rule files", at.span);
                headAtom.args.push_back(std::get<Term>(arg));
            }
            rules.push_back(Interner::instance().internRule(std::move(pos), std::move(neg),
                                                            groundAtomId(headAtom)));
        }
        return rules;
    }

    GAtomId groundAtom() {
        Token at = cur_;
        Atom a = atom();
        if (cur_.kind == Tok::Dot) consume();
        expect(Tok::End, "end of input");
        if (!a.ground()) throw ParseError("atom must be ground", at.span);
        std::vector<ConstId> args;
        for (const Term &t : a.args) args.push_back(std::get<ConstId>(t));
        return Interner::instance().internAtom(a.pred, std::move(args));
    }

  private:
    GRule rule() { return ruleOnly(); }

    GRule ruleOnly() {
        GRule r;
        Token start = cur_;
        if (cur_.kind != Tok::Arrow) {
            for (;;) {
                bool negated = false;
                if (cur_.kind == Tok::Ident && cur_.text == "not") {
                    negated = true;
                    consume();
                }
                Atom a = atom();
                (negated ? r.neg : r.pos).push_back(std::move(a));
                if (cur_.kind == Tok::Comma) {
                    consume();
                    continue;
                }
                break;
            }
        }
        expect(Tok::Arrow, "'->'");
        if (cur_.kind == Tok::Ident && cur_.text == "false") {
            consume();
            r.head = std::nullopt;
        } else {
            r.head = headAtom();
        }
        expect(Tok::Dot, "'.'");
        try {
            validateRule(r);
        } catch (const InputError &e) {
            throw ParseError(e.what(), start.span);
        }
        return r;
    }

    Atom atom() {
        Token name = expect(Tok::Ident, "predicate name");
        checkPredName(name);
        std::vector<Term> args;
        if (cur_.kind == Tok::LParen) {
            consume();
            for (;;) {
                args.push_back(term());
                if (cur_.kind == Tok::Comma) {
                    consume();
                    continue;
                }
                break;
            }
            expect(Tok::RParen, "')'");
        }
        Atom a;
        a.pred = internPred(name, args.size());
        a.args = std::move(args);
        return a;
    }

    HeadAtom headAtom() {
        Token name = expect(Tok::Ident, "predicate name");
        checkPredName(name);
        std::vector<HeadArg> args;
        if (cur_.kind == Tok::LParen) {
            consume();
            for (;;) {
                args.push_back(headArg());
                if (cur_.kind == Tok::Comma) {
                    consume();
                    continue;
                }
                break;
            }
            expect(Tok::RParen, "')'");
        }
        HeadAtom h;
        h.pred = internPred(name, args.size());
        h.args = std::move(args);
        return h;
    }

    HeadArg headArg() {
        // `name<` begins a delta term; anything else is an ordinary term.
        if (cur_.kind == Tok::Ident && peekIsAngle()) {
            Token name = consume();
            if (registry_ && !registry_->has(name.text))
                throw ParseError("unknown distribution '" + name.text + "'", name.span);
            expect(Tok::LAngle, "'<'");
            DeltaTerm d;
            d.dist = name.text;
            for (;;) {
                d.params.push_back(term());
                if (cur_.kind == Tok::Comma) {
                    consume();
                    continue;
                }
                break;
            }
            expect(Tok::RAngle, "'>'");
            if (registry_) {
                std::size_t dim = registry_->find(name.text).dimension;
                if (d.params.size() != dim)
                    throw ParseError("distribution '" + name.text + "' takes " +
                                         std::to_string(dim) + " parameters, got " +
                                         std::to_string(d.params.size()),
                                     name.span);
            }
            if (cur_.kind == Tok::LBracket) {
                consume();
                for (;;) {
                    d.sig.push_back(term());
                    if (cur_.kind == Tok::Comma) {
                        consume();
                        continue;
                    }
                    break;
                }
                expect(Tok::RBracket, "']'");
            }
            return d;
        }
        return HeadArg{term()};
    }

    Term term() {
        Interner &in = Interner::instance();
        if (cur_.kind == Tok::Number) {
            Token t = consume();
            return Term{in.internNumeric(ratFromString(t.text))};
        }
        if (cur_.kind == Tok::Quoted) {
            Token t = consume();
            return Term{in.internSymbol(t.text)};
        }
        if (cur_.kind == Tok::Question) {
            consume();
            Token t = expect(Tok::Ident, "variable name");
            return Term{in.internVar(t.text)};
        }
        if (cur_.kind == Tok::Ident) {
            Token t = cur_;
            if (t.text == "not" || t.text == "false")
                throw ParseError("'" + t.text + "' is a reserved word", t.span);
            consume();
            if (peekDelta())
                throw ParseError("delta terms may appear only in rule heads", t.span);
            if (std::isupper(static_cast<unsigned char>(t.text[0])))
                return Term{in.internVar(t.text)};
            return Term{in.internSymbol(t.text)};
        }
        throw ParseError("expected a term", cur_.span);
    }

    bool peekIsAngle() const { return nextPeek_.kind == Tok::LAngle; }
    bool peekDelta() const { return cur_.kind == Tok::LAngle; }

    void checkPredName(const Token &name) {
        if (name.text == "not" || name.text == "false" || name.text == "exists")
            throw ParseError("'" + name.text + "' is a reserved word", name.span);
        if (!allowReserved_ && name.text.rfind("__", 0) == 0)
            throw ParseError("predicate names starting with '__' are reserved", name.span);
    }

    PredId internPred(const Token &name, std::size_t arity) {
        try {
            return Interner::instance().internPred(name.text, arity);
        } catch (const InputError &e) {
            throw ParseError(e.what(), name.span);
        }
    }

    Token expect(Tok kind, const std::string &what) {
        if (cur_.kind != kind)
            throw ParseError("expected " + what + (cur_.kind == Tok::End ? " before end of input"
                                                                         : ", found '" + cur_.text + "'"),
                             cur_.span);
        return consume();
    }

    Token consume() {
        Token t = cur_;
        cur_ = nextPeek_;
        nextPeek_ = lexer_.next();
        return t;
    }

    Lexer lexer_;
    const DistributionRegistry *registry_;
    bool allowReserved_;
    Token cur_;
    Token nextPeek_;
};

} // namespace

GProgram parseProgram(const std::string &text, const DistributionRegistry &registry,
                      const std::string &file) {
    Parser parser(text, &registry, file, /*allowReserved=*/false);
    GProgram raw = parser.program();
    return desugarBot(raw);
}

Database parseDatabase(const std::string &text, const std::string &file) {
    Parser parser(text, nullptr, file, /*allowReserved=*/false);
    return parser.database();
}

std::vector<GRuleId> parseGroundRules(const std::string &text, const std::string &file) {
    Parser parser(text, nullptr, file, /*allowReserved=*/true);
    return parser.groundRules();
}

GAtomId parseGroundAtom(const std::string &text, const std::string &file) {
    Parser parser(text, nullptr, file, /*allowReserved=*/true);
    return parser.groundAtom();
}

} // namespace gdlog
