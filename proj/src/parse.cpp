#include "susp/parse.hpp"

#include "susp/error.hpp"

#include <cctype>

namespace susp {

namespace {

class Parser {
public:
    Parser(const std::string& src, RingPtr ring) : src_(src), ring_(std::move(ring)) {}

    MultiPoly parse() {
        skip_ws();
        if (at_end()) fail("empty expression");
        MultiPoly p = expr();
        skip_ws();
        if (!at_end()) fail(std::string("unexpected '") + src_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

    [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
        int line = 1, column = 1;
        for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw SyntaxError(what, line, column);
    }

    bool at_end() const { return pos_ >= src_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (!at_end() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        while (true) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                skip_ws();
                std::size_t at = pos_;
                MultiPoly d = unary();
                if (!d.is_constant()) fail_at("division by a non-constant expression", at);
                if (d.is_zero()) fail_at("division by zero", at);
                acc *= 1 / d.constant_value();
            } else {
                return acc;
            }
        }
    }

    MultiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (accept('^')) {
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                fail("expected a non-negative integer exponent");
            }
            std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            std::string digits = src_.substr(start, pos_ - start);
            if (digits.size() > 6) fail_at("exponent too large", start);
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
            skip_ws();
            if (!at_end() && src_[pos_] == '^') fail("chained '^' is not allowed; use parentheses");
        }
        return base;
    }

    MultiPoly atom() {
        skip_ws();
        if (at_end()) fail("unexpected end of input");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return MultiPoly::constant(ring_, Rational(Integer(src_.substr(start, pos_ - start), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
            std::string name = src_.substr(start, pos_ - start);
            auto idx = ring_->index_of(name);
            if (!idx) {
                throw Error(ErrorCode::UnknownVariable,
                            "unknown variable '" + name + "' (ring " + ring_->to_string() + ")");
            }
            return MultiPoly::variable(ring_, *idx);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& src_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(const std::string& src, const RingPtr& ring) {
    return Parser(src, ring).parse();
}

}  // namespace susp
