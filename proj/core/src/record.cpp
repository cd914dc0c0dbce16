#include "ndslab/record.hpp"

#include <cctype>

namespace ndslab {

const RecordValue* RecordValue::find(std::string_view key) const {
    for (const auto& [k, v] : fields) {
        if (k == key) return &v;
    }
    return nullptr;
}

const RecordValue& RecordValue::at(std::string_view key) const {
    const RecordValue* v = find(key);
    if (!v) throw QueryError("missing field '" + std::string(key) + "' in record '" + record_name + "'");
    return *v;
}

std::string quote_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void skip_space_inline() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    int line() const { return line_; }
    int column() const { return col_; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    void expect(char c) {
        skip_space();
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    bool try_consume(char c) {
        skip_space();
        if (!eof() && peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    std::string identifier() {
        skip_space();
        std::string out;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.') {
                out.push_back(c);
                advance();
            } else {
                break;
            }
        }
        if (out.empty()) fail("expected identifier");
        return out;
    }

    RecordValue value() {
        skip_space();
        if (eof()) fail("expected value");
        char c = peek();
        RecordValue v;
        if (c == '"') {
            advance();
            v.kind = RecordValue::Kind::String;
            while (!eof() && peek() != '"') {
                if (peek() == '\\') {
                    advance();
                    if (eof()) fail("unterminated escape");
                }
                v.text.push_back(peek());
                advance();
            }
            if (eof()) fail("unterminated string");
            advance();
            return v;
        }
        if (c == '[') {
            advance();
            v.kind = RecordValue::Kind::List;
            skip_space();
            if (try_consume(']')) return v;
            while (true) {
                v.list.push_back(value());
                if (try_consume(']')) break;
                expect(',');
            }
            return v;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            v.kind = RecordValue::Kind::Integer;
            std::string num;
            if (c == '-') {
                num.push_back(c);
                advance();
            }
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                num.push_back(peek());
                advance();
            }
            if (num.empty() || num == "-") fail("expected number");
            // Fractions and decimals in config files must be quoted; a bare
            // integer is the only unquoted numeric form.
            v.integer = std::stoll(num);
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            return record();
        }
        fail("unexpected character in value");
    }

    RecordValue record() {
        RecordValue v;
        v.kind = RecordValue::Kind::Record;
        v.record_name = identifier();
        expect('{');
        if (try_consume('}')) return v;
        while (true) {
            std::string key = identifier();
            expect('=');
            v.fields.emplace_back(std::move(key), value());
            if (try_consume('}')) break;
            expect(',');
        }
        return v;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

RecordValue parse_record_text(std::string_view text) {
    Lexer lex(text);
    RecordValue v = lex.record();
    lex.skip_space();
    if (!lex.eof()) lex.fail("trailing input after record");
    return v;
}

std::vector<std::pair<std::string, RecordValue>> parse_config_text(std::string_view text) {
    Lexer lex(text);
    std::vector<std::pair<std::string, RecordValue>> fields;
    lex.skip_space();
    while (!lex.eof()) {
        std::string key = lex.identifier();
        lex.expect('=');
        fields.emplace_back(std::move(key), lex.value());
        lex.skip_space();
    }
    return fields;
}

}  // namespace ndslab
