#include "qratpp/qdimacs.hpp"

#include <cctype>
#include <sstream>

namespace qratpp {

namespace {

constexpr int64_t kMaxVarId = 50'000'000;

// Token-level reader. Comment lines ('c' as the first non-blank character
// of a line) are skipped; everything else is words and integers separated
// by arbitrary whitespace.
class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    struct Token {
        enum class Kind { Integer, Word, End } kind = Kind::End;
        int64_t number = 0;
        char word = '\0';
        uint32_t line = 1;
    };

    Token next() {
        skip_blanks_and_comments();
        Token t;
        t.line = line_;
        if (pos_ >= text_.size())
            return t;
        char c = text_[pos_];
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            bool negative = c == '-';
            size_t start = pos_;
            if (negative)
                ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError(line_, "stray '-' without a digit");
            int64_t value = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                value = value * 10 + (text_[pos_] - '0');
                if (value > kMaxVarId)
                    throw ParseError(line_, "number too large: " +
                                                std::string(text_.substr(start, pos_ - start + 1)));
                ++pos_;
            }
            if (negative && value == 0)
                throw ParseError(line_, "literal '-0' is not allowed");
            t.kind = Token::Kind::Integer;
            t.number = negative ? -value : value;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            // Single-letter keywords only: p, cnf handled as words below.
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string_view w = text_.substr(start, pos_ - start);
            if (w == "p") {
                t.kind = Token::Kind::Word;
                t.word = 'p';
                return t;
            }
            if (w == "cnf") {
                t.kind = Token::Kind::Word;
                t.word = 'f';
                return t;
            }
            if (w == "e" || w == "a") {
                t.kind = Token::Kind::Word;
                t.word = w[0];
                return t;
            }
            throw ParseError(line_, "unexpected token '" + std::string(w) + "'");
        }
        throw ParseError(line_, std::string("unexpected character '") + c + "'");
    }

private:
    void skip_blanks_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                at_line_start_ = true;
                ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
                ++pos_;
            } else if (c == 'c' && at_line_start_) {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    ++pos_;
            } else {
                at_line_start_ = false;
                return;
            }
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
    uint32_t line_ = 1;
    bool at_line_start_ = true;
};

} // namespace

ParseResult parse_qdimacs(std::string_view text, const ParseOptions& options) {
    Lexer lexer(text);
    using Token = Lexer::Token;

    // Preamble.
    Token t = lexer.next();
    if (t.kind == Token::Kind::End)
        throw ParseError(t.line, "empty input, expected 'p cnf' preamble");
    if (t.kind != Token::Kind::Word || t.word != 'p')
        throw ParseError(t.line, "expected 'p cnf' preamble before any clause");
    t = lexer.next();
    if (t.kind != Token::Kind::Word || t.word != 'f')
        throw ParseError(t.line, "malformed preamble, expected 'cnf'");
    t = lexer.next();
    if (t.kind != Token::Kind::Integer || t.number < 0)
        throw ParseError(t.line, "malformed preamble, expected variable count");
    int64_t declared_vars = t.number;
    t = lexer.next();
    if (t.kind != Token::Kind::Integer || t.number < 0)
        throw ParseError(t.line, "malformed preamble, expected clause count");

    ParseResult result;
    Pcnf& f = result.formula;
    bool in_matrix = false;

    auto check_var = [&](int64_t id, uint32_t line) {
        if (id > declared_vars) {
            if (options.strict)
                throw ParseError(line, "variable " + std::to_string(id) +
                                           " exceeds declared bound " +
                                           std::to_string(declared_vars));
            declared_vars = id;
        }
    };

    for (t = lexer.next(); t.kind != Token::Kind::End; t = lexer.next()) {
        if (t.kind == Token::Kind::Word && (t.word == 'e' || t.word == 'a')) {
            if (in_matrix)
                throw ParseError(t.line, "quantifier line after the first clause");
            f.declare_block(t.word == 'e' ? Quantifier::Existential : Quantifier::Universal);
            while (true) {
                Token v = lexer.next();
                if (v.kind == Token::Kind::End)
                    throw ParseError(v.line, "unterminated quantifier block, missing 0");
                if (v.kind != Token::Kind::Integer)
                    throw ParseError(v.line, "expected variable or 0 in quantifier block");
                if (v.number == 0)
                    break;
                if (v.number < 0)
                    throw ParseError(v.line, "negative variable in quantifier block");
                check_var(v.number, v.line);
                try {
                    f.declare_variable(static_cast<uint32_t>(v.number));
                } catch (const std::invalid_argument& e) {
                    throw ParseError(v.line, e.what());
                }
            }
        } else if (t.kind == Token::Kind::Integer) {
            in_matrix = true;
            std::vector<Lit> lits;
            Token v = t;
            while (v.number != 0) {
                check_var(v.number < 0 ? -v.number : v.number, v.line);
                lits.push_back(Lit::from_dimacs(v.number));
                v = lexer.next();
                if (v.kind == Token::Kind::End)
                    throw ParseError(v.line, "unterminated clause, missing 0");
                if (v.kind != Token::Kind::Integer)
                    throw ParseError(v.line, "expected literal or 0 in clause");
            }
            f.add_clause(std::move(lits));
        } else if (t.kind == Token::Kind::Word && t.word == 'p') {
            throw ParseError(t.line, "duplicate preamble");
        } else {
            throw ParseError(t.line, "unexpected token");
        }
    }

    result.diagnostics = f.normalize();
    return result;
}

ParseResult parse_qdimacs(std::istream& in, const ParseOptions& options) {
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    return parse_qdimacs(text, options);
}

std::string write_qdimacs(const Pcnf& f) {
    std::string out;
    if (f.live_clause_count() == 0) {
        out += "c solved: SAT\n";
        out += "p cnf 0 0\n";
        return out;
    }

    auto blocks = f.canonical_blocks();
    uint32_t max_var = 0;
    for (const QuantBlock& b : blocks)
        for (uint32_t v : b.vars)
            max_var = std::max(max_var, v);

    out += "p cnf " + std::to_string(max_var) + " " +
           std::to_string(f.live_clause_count()) + "\n";
    for (const QuantBlock& b : blocks) {
        out += b.quant == Quantifier::Existential ? "e" : "a";
        for (uint32_t v : b.vars) {
            out += ' ';
            out += std::to_string(v);
        }
        out += " 0\n";
    }
    for (uint32_t cid = 0; cid < f.clause_count(); ++cid) {
        const Clause& c = f.clause(cid);
        if (!c.live)
            continue;
        for (Lit l : c.lits) {
            out += std::to_string(l.to_dimacs());
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

} // namespace qratpp
