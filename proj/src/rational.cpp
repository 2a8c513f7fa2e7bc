#include "vortsym/rational.hpp"

#include <stdexcept>

namespace vortsym {

Rational make_rational(Int num, Int den) {
    if (den == 0) {
        throw std::invalid_argument("rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("rational: empty string");
    }
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Int(std::string(text)));
        }
        Int num(std::string(text.substr(0, slash)));
        Int den(std::string(text.substr(slash + 1)));
        return make_rational(std::move(num), std::move(den));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    }
}

std::string to_string(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

}  // namespace vortsym
