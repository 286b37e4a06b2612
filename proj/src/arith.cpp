#include "genusbound/arith.hpp"

#include <cctype>

namespace genusbound {

namespace {

bool is_signed_digits(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Int parse_integer(const std::string& text) {
    if (!is_signed_digits(text)) {
        throw InputError("not an integer literal: '" + text + "'");
    }
    return Int(text);
}

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rat(parse_integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_signed_digits(num) || !is_signed_digits(den)) {
        throw InputError("not a rational literal: '" + text + "'");
    }
    Int d = parse_integer(den);
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    Rat r(parse_integer(num), d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace genusbound
