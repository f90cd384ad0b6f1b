#include "slopelab/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace slopelab {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rat make_reduced(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rat::from_reduced(narrow(n), narrow(d));
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto first = s.data();
    auto last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::int64_t gcd64(std::int64_t a, std::int64_t b) noexcept {
    return std::gcd(a, b);
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return narrow(static_cast<i128>(a / gcd64(a, b)) * b);
}

std::int64_t mod64(std::int64_t a, std::int64_t m) noexcept {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

Rat::Rat(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("division by zero");
    *this = make_reduced(n, d);
}

std::int64_t Rat::floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rat Rat::frac() const {
    return Rat::from_reduced(mod64(num_, den_), den_);
}

Rat Rat::inverse() const {
    if (num_ == 0) throw std::domain_error("inverse of zero");
    return make_reduced(den_, num_);
}

Rat Rat::operator-() const {
    return Rat::from_reduced(narrow(-static_cast<i128>(num_)), den_);
}

Rat& Rat::operator+=(const Rat& o) {
    if (den_ == o.den_) {
        *this = make_reduced(static_cast<i128>(num_) + o.num_, den_);
    } else {
        *this = make_reduced(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                             static_cast<i128>(den_) * o.den_);
    }
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    return *this += -o;
}

Rat& Rat::operator*=(const Rat& o) {
    if (num_ == 0 || o.num_ == 0) {
        *this = Rat();
        return *this;
    }
    // Cross-cancel first so the 128-bit product stays small.
    std::int64_t g1 = gcd64(num_, o.den_);
    std::int64_t g2 = gcd64(o.num_, den_);
    i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) noexcept {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rat::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rat::fraction_str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    return Rat(parse_int(trim(text.substr(0, slash))), parse_int(trim(text.substr(slash + 1))));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

}  // namespace slopelab
