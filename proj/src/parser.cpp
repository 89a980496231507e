#include "qlf/parser.hpp"

#include <cctype>
#include <sstream>

namespace qlf {

namespace {

class Parser {
  public:
    Parser(FieldPtr field, std::string_view text) : field_(std::move(field)), text_(text) {}

    RationalFunction run() {
        skip_ws();
        RationalFunction v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail(ErrorCode::ParseError, "unexpected trailing input");
        return v;
    }

  private:
    [[noreturn]] void fail(ErrorCode code, const std::string& msg) {
        std::ostringstream os;
        os << msg << " at " << line_ << ":" << col_;
        raise(code, os.str());
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction v = term();
        while (true) {
            skip_ws();
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    RationalFunction term() {
        RationalFunction v = unary();
        while (true) {
            skip_ws();
            if (eat('*')) {
                v = v * unary();
            } else if (peek() == '/') {
                int l = line_, c = col_;
                advance();
                RationalFunction d = unary();
                if (d.is_zero()) {
                    std::ostringstream os;
                    os << "division by zero at " << l << ":" << c;
                    raise(ErrorCode::SemanticError, os.str());
                }
                v = v / d;
            } else {
                return v;
            }
        }
    }

    RationalFunction unary() {
        skip_ws();
        if (eat('-')) return -unary();
        return power();
    }

    RationalFunction power() {
        RationalFunction v = atom();
        while (true) {
            skip_ws();
            if (peek() != '^') return v;
            advance();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail(ErrorCode::ParseError, "expected integer exponent after '^'");
            v = v.pow(integer());
        }
    }

    int64_t integer() {
        int64_t n = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            n = n * 10 + (advance() - '0');
            if (n > (int64_t(1) << 40)) fail(ErrorCode::ParseError, "integer literal too large");
        }
        return n;
    }

    RationalFunction atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            advance();
            RationalFunction v = expr();
            if (!eat(')')) fail(ErrorCode::ParseError, "expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            // literals reduce mod p
            return RationalFunction::constant(field_, integer() % field_->p());
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int l = line_, col = col_;
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                name.push_back(advance());
            auto idx = field_->var_index(name);
            if (!idx) {
                std::ostringstream os;
                os << "unknown variable '" << name << "' at " << l << ":" << col;
                raise(ErrorCode::SemanticError, os.str());
            }
            return RationalFunction::variable(field_, *idx);
        }
        if (c == '\0') fail(ErrorCode::ParseError, "unexpected end of input");
        fail(ErrorCode::ParseError, std::string("unexpected character '") + c + "'");
    }

    FieldPtr field_;
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

} // namespace

RationalFunction parse_expression(const FieldPtr& field, std::string_view text) {
    return Parser(field, text).run();
}

} // namespace qlf
