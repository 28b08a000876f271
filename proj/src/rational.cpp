#include "freecalc/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <string>

#include "freecalc/error.hpp"

namespace freecalc {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    std::string num_str(num.front() == '+' ? num.substr(1) : num);
    Integer p(num_str, 10);
    Integer q(std::string(den), 10);
    if (q == 0) {
        throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    Rational copy = value;
    copy.canonicalize();
    return copy.get_str(10);
}

Integer binomial(long n, long k)
{
    if (n == -1 && k == -1) {
        return 1;
    }
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

Rational power(const Rational& base, unsigned long exponent)
{
    Rational result(1);
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1UL) {
            result *= b;
        }
        exponent >>= 1;
        if (exponent > 0) {
            b *= b;
        }
    }
    return result;
}

std::size_t effective_cap(std::size_t default_cap)
{
    const char* raw = std::getenv("NC_FREECALC_CAP_OVERRIDE");
    if (raw == nullptr || *raw == '\0') {
        return default_cap;
    }
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') {
        return default_cap;
    }
    return std::max<std::size_t>(default_cap, static_cast<std::size_t>(v));
}

void check_cap(std::size_t n, std::size_t default_cap, std::string_view what)
{
    const std::size_t cap = effective_cap(default_cap);
    if (n > cap) {
        throw CapExceeded(std::string(what) + ": size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
}

} // namespace freecalc
