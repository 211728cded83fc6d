#include "ybmaps/rational.hpp"

#include <ostream>

namespace ybmaps {

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] { return Error("malformed rational literal: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    if (text[0] == '+') text.remove_prefix(1);  // mpz_set_str rejects a leading plus
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const auto is_int = [&](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw bad();
        return Rational(mpq_class(mpz_class(std::string(text)), 1));
    }
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw bad();
    const mpz_class d{std::string(den)};
    if (d == 0) throw DivisionByZero();
    return Rational(mpq_class(mpz_class{std::string(num)}, d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ybmaps
