#include "rcb/scalar.hpp"

#include <cctype>

namespace rcb {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto check_int = [&](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!check_int(num, true) || !check_int(den, false))
        throw ParseError("malformed rational literal '" + text + "'");
    Rational q;
    if (q.set_str(num + "/" + den, 10) != 0)
        throw ParseError("malformed rational literal '" + text + "'");
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace rcb
