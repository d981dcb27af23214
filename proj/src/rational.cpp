#include "tcl/rational.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "tcl/errors.hpp"

namespace tcl {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    auto valid_integer = [](std::string_view s) {
        if (!s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-') {
        throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    const mpz_class p{std::string(num)}, q{std::string(den)};
    if (q == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

}  // namespace tcl
