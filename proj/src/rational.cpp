#include "concord/rational.hpp"

#include <cctype>

namespace concord {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(text)) throw BadParameters("not a rational: '" + text + "'");
        return Rational(Integer(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw BadParameters("not a rational: '" + text + "'");
    return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const Integer& n) {
    return n.get_str();
}

}  // namespace concord
