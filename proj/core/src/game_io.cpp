/*
 * Copyright 2026 The muller-hurry Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "muller/game_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "muller/errors.hpp"

namespace muller {

namespace {

struct Token
{
    enum class Kind { Word, Number, String, Punct, End };

    Kind kind = Kind::End;
    std::string text;
    std::uint64_t number = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer
{
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next()
    {
        skip_blank();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= text_.size()) return t;

        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::Number;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) t.text += take();
            const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
            if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
                throw SyntaxError(t.line, t.column, "number " + t.text + " is out of range");
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Kind::Word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                t.text += take();
        } else if (c == '"') {
            t.kind = Token::Kind::String;
            take();
            while (true) {
                if (pos_ >= text_.size() || text_[pos_] == '\n')
                    throw SyntaxError(t.line, t.column, "unterminated string");
                char ch = take();
                if (ch == '"') break;
                if (ch == '\\') {
                    if (pos_ >= text_.size()) throw SyntaxError(t.line, t.column, "unterminated string");
                    ch = take();
                }
                t.text += ch;
            }
        } else if (c == ';' || c == ',' || c == '{' || c == '}' || c == ':') {
            t.kind = Token::Kind::Punct;
            t.text = std::string(1, take());
        } else {
            throw SyntaxError(line_, column_, std::string("unexpected character '") + c + "'");
        }
        return t;
    }

private:
    char take()
    {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_blank()
    {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser
{
public:
    explicit Parser(std::string_view text) : lex_(text) { advance(); }

    GameFile parse()
    {
        expect_word("muller");
        const Token count = expect_number("vertex count");
        expect_punct(';');
        if (count.number > kMaxVertices)
            throw SemanticError("arena has " + count.text + " vertices; at most 64 are supported");
        n_ = static_cast<std::size_t>(count.number);
        owners_.resize(n_);
        successors_.resize(n_);
        names_.resize(n_);
        seen_.resize(n_, false);

        while (cur_.kind != Token::Kind::End) {
            if (cur_.kind == Token::Kind::Number) {
                vertex_line();
            } else if (cur_.kind == Token::Kind::Word && cur_.text == "F0") {
                f0_section();
            } else if (cur_.kind == Token::Kind::Word && cur_.text == "start") {
                start_line();
            } else {
                fail("expected a vertex line, 'F0:' or 'start:'");
            }
        }

        for (std::size_t v = 0; v < n_; ++v)
            if (!seen_[v]) throw SemanticError("vertex " + std::to_string(v) + " is not declared");
        if (!have_f0_) throw SemanticError("missing F0 section");

        bool any_name = false;
        for (const auto& name : names_) any_name = any_name || !name.empty();
        if (!any_name) names_.clear();

        GameFile game;
        try {
            game.arena = Arena(std::move(owners_), std::move(successors_), std::move(names_));
            game.condition = MullerCondition(VertexSet::first_n(n_), std::move(f0_));
        } catch (const InvalidArena& e) {
            throw SemanticError(e.what());
        } catch (const InvalidCondition& e) {
            throw SemanticError(e.what());
        }
        game.start = start_;
        return game;
    }

private:
    void vertex_line()
    {
        const Token id = expect_number("vertex id");
        if (id.number >= n_)
            throw SemanticError(at(id) + "vertex id " + id.text + " is outside 0.." + std::to_string(n_ - 1));
        const auto v = static_cast<VertexId>(id.number);
        if (seen_[v]) throw SemanticError(at(id) + "vertex " + id.text + " is declared twice");
        seen_[v] = true;

        const Token owner = expect_number("owner");
        if (owner.number > 1) throw SemanticError(at(owner) + "owner must be 0 or 1");
        owners_[v] = owner.number == 0 ? Player::Zero : Player::One;

        VertexSet dup;
        if (cur_.kind == Token::Kind::Number) {
            while (true) {
                const Token s = expect_number("successor");
                if (s.number >= n_) throw SemanticError(at(s) + "successor " + s.text + " does not exist");
                const auto sv = static_cast<VertexId>(s.number);
                if (dup.contains(sv)) throw SemanticError(at(s) + "duplicate successor " + s.text);
                dup.insert(sv);
                successors_[v].push_back(sv);
                if (!is_punct(',')) break;
                advance();
            }
        }
        if (successors_[v].empty()) throw SemanticError(at(id) + "vertex " + id.text + " has no successor");
        if (cur_.kind == Token::Kind::String) {
            names_[v] = cur_.text;
            advance();
        }
        expect_punct(';');
    }

    void f0_section()
    {
        const Token head = cur_;
        if (have_f0_) throw SemanticError(at(head) + "F0 is given twice");
        have_f0_ = true;
        advance();
        expect_punct(':');
        if (is_punct(';')) {
            advance();
            return;
        }
        while (true) {
            f0_.push_back(set());
            if (!is_punct(',')) break;
            advance();
        }
        expect_punct(';');
    }

    VertexSet set()
    {
        expect_punct('{');
        VertexSet s;
        if (!is_punct('}')) {
            while (true) {
                const Token m = expect_number("set member");
                if (m.number >= n_)
                    throw SemanticError(at(m) + "set member " + m.text + " is outside the universe");
                s.insert(static_cast<VertexId>(m.number));
                if (!is_punct(',')) break;
                advance();
            }
        }
        expect_punct('}');
        return s;
    }

    void start_line()
    {
        const Token head = cur_;
        if (start_) throw SemanticError(at(head) + "start is given twice");
        advance();
        expect_punct(':');
        const Token s = expect_number("start vertex");
        if (s.number >= n_) throw SemanticError(at(s) + "start vertex " + s.text + " does not exist");
        start_ = static_cast<VertexId>(s.number);
        expect_punct(';');
    }

    static std::string at(const Token& t)
    {
        return std::to_string(t.line) + ":" + std::to_string(t.column) + ": ";
    }

    void advance() { cur_ = lex_.next(); }

    bool is_punct(char c) const { return cur_.kind == Token::Kind::Punct && cur_.text[0] == c; }

    [[noreturn]] void fail(const std::string& what) const
    {
        const std::string found = cur_.kind == Token::Kind::End ? "end of input" : "'" + cur_.text + "'";
        throw SyntaxError(cur_.line, cur_.column, what + ", found " + found);
    }

    void expect_word(const char* w)
    {
        if (cur_.kind != Token::Kind::Word || cur_.text != w) fail(std::string("expected '") + w + "'");
        advance();
    }

    void expect_punct(char c)
    {
        if (!is_punct(c)) fail(std::string("expected '") + c + "'");
        advance();
    }

    Token expect_number(const char* what)
    {
        if (cur_.kind != Token::Kind::Number) fail(std::string("expected ") + what);
        Token t = cur_;
        advance();
        return t;
    }

    Lexer lex_;
    Token cur_;
    std::size_t n_ = 0;
    std::vector<Player> owners_;
    std::vector<std::vector<VertexId>> successors_;
    std::vector<std::string> names_;
    std::vector<bool> seen_;
    std::vector<VertexSet> f0_;
    bool have_f0_ = false;
    std::optional<VertexId> start_;
};

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

GameFile parse_game(std::string_view text)
{
    return Parser(text).parse();
}

GameFile load_game(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_game(buf.str());
}

std::string print_game(const GameFile& game)
{
    std::ostringstream out;
    const Arena& a = game.arena;
    out << "muller " << a.size() << ";\n";
    for (VertexId v = 0; v < a.size(); ++v) {
        out << v << ' ' << index_of(a.owner(v)) << ' ';
        bool first = true;
        for (VertexId s : a.successors(v)) {
            if (!first) out << ',';
            out << s;
            first = false;
        }
        if (a.has_names() && !a.name(v).empty()) out << ' ' << quoted(a.name(v));
        out << ";\n";
    }
    out << "F0:";
    bool first = true;
    for (VertexSet f : game.condition.f0()) {
        out << (first ? " " : ",") << f.to_string();
        first = false;
    }
    out << ";\n";
    if (game.start) out << "start: " << *game.start << ";\n";
    return out.str();
}

} // namespace muller
