#include "totalsr/utility.hpp"

#include <cctype>
#include <numeric>

namespace totalsr {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Utility Utility::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto dot = text.find('.');
    std::string_view whole = dot == std::string_view::npos ? text : text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
        throw std::invalid_argument("empty decimal");
    }
    if (!whole.empty() && !all_digits(whole)) {
        throw std::invalid_argument("bad decimal: " + std::string(text));
    }
    if (dot != std::string_view::npos && (frac.empty() || !all_digits(frac))) {
        throw std::invalid_argument("bad decimal: " + std::string(text));
    }
    if (frac.size() > 4) {
        throw std::invalid_argument("more than four fractional digits: " + std::string(text));
    }
    std::int64_t raw = 0;
    for (char c : whole) {
        raw = raw * 10 + (c - '0');
        if (raw > (1LL << 53)) throw std::invalid_argument("decimal out of range");
    }
    raw *= kScale;
    std::int64_t scale = kScale / 10;
    for (char c : frac) {
        raw += (c - '0') * scale;
        scale /= 10;
    }
    return from_raw(negative ? -raw : raw);
}

std::string Utility::str() const {
    std::int64_t r = raw_;
    std::string sign;
    if (r < 0) {
        sign = "-";
        r = -r;
    }
    std::int64_t whole = r / kScale;
    std::int64_t frac = r % kScale;
    if (frac == 0) return sign + std::to_string(whole);
    char buf[8];
    std::snprintf(buf, sizeof buf, "%04lld", static_cast<long long>(frac));
    std::string f(buf);
    while (f.back() == '0') f.pop_back();
    return sign + std::to_string(whole) + "." + f;
}

Fraction Fraction::of(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return Fraction{n / g, d / g};
}

Fraction Fraction::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::int64_t n = std::stoll(std::string(text.substr(0, slash)));
        std::int64_t d = std::stoll(std::string(text.substr(slash + 1)));
        return of(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        return of(std::stoll(std::string(text)), 1);
    }
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    std::int64_t den = 1;
    std::int64_t num = whole.empty() ? 0 : std::stoll(std::string(whole));
    for (char c : frac) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("bad fraction: " + std::string(text));
        }
        num = num * 10 + (c - '0');
        den *= 10;
    }
    return of(num, den);
}

std::string Fraction::render4() const {
    // Round half up at the fourth decimal.
    __int128 scaled = static_cast<__int128>(num) * 10000;
    std::int64_t q = static_cast<std::int64_t>(scaled / den);
    std::int64_t rem = static_cast<std::int64_t>(scaled % den);
    if (2 * rem >= den) ++q;
    std::int64_t whole = q / 10000;
    std::int64_t frac = q % 10000;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld.%04lld", static_cast<long long>(whole),
                  static_cast<long long>(frac));
    return buf;
}

}  // namespace totalsr
