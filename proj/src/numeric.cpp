#include "susp/numeric.hpp"

#include "susp/error.hpp"

#include <cctype>

namespace susp {

namespace {

bool is_integer_text(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Integer parse_integer(std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_text(s)) throw Error(ErrorCode::InvalidArgument, "not a rational number: '" + text + "'");
        return Rational(parse_integer(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den)) {
        throw Error(ErrorCode::InvalidArgument, "not a rational number: '" + text + "'");
    }
    Integer d = parse_integer(den);
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
    return make_rational(parse_integer(num), d);
}

}  // namespace susp
