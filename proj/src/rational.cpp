#include "reals/rational.hpp"

#include <ostream>
#include <sstream>

namespace reals {

void Rational::reduce() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

bool Rational::is_dyadic() const {
    // den > 0 invariant; power of two iff a single set bit
    return (den_ & (den_ - 1)) == 0;
}

Rational Rational::pow2(long k) {
    Int one(1);
    if (k >= 0) return Rational(raw{}, one << static_cast<unsigned>(k), 1);
    return Rational(raw{}, 1, one << static_cast<unsigned>(-k));
}

Int Rational::floor() const {
    Int q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
}

std::string Rational::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("Rational: empty literal");

    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view n = s.substr(0, slash), d = s.substr(slash + 1);
        if (!all_digits(n) || !all_digits(d))
            throw std::invalid_argument("Rational: malformed fraction '" + std::string(text) + "'");
        out = Rational(Int(std::string(n)), Int(std::string(d)));
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty())
            throw std::invalid_argument("Rational: malformed decimal '" + std::string(text) + "'");
        if (!ip.empty() && !all_digits(ip))
            throw std::invalid_argument("Rational: malformed decimal '" + std::string(text) + "'");
        if (!fp.empty() && !all_digits(fp))
            throw std::invalid_argument("Rational: malformed decimal '" + std::string(text) + "'");
        Int num = ip.empty() ? Int(0) : Int(std::string(ip));
        Int den(1);
        for (char c : fp) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        out = Rational(num, den);
    } else {
        if (!all_digits(s))
            throw std::invalid_argument("Rational: malformed integer '" + std::string(text) + "'");
        out = Rational(Int(std::string(s)));
    }
    return neg ? -out : out;
}

std::string Rational::to_decimal(unsigned digits) const {
    Int scale(1);
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Int n = num_ < 0 ? Int(-num_) : num_;
    Int scaled = n * scale;
    Int q = scaled / den_;
    Int rem = scaled - q * den_;
    if (2 * rem >= den_) ++q;  // ties away from zero

    std::string body = q.str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    std::string out;
    if (num_ < 0 && q != 0) out += '-';
    if (digits == 0) {
        out += body;
    } else {
        out += body.substr(0, body.size() - digits);
        out += '.';
        out += body.substr(body.size() - digits);
    }
    return out;
}

Rational normalize(const Int& n, const Int& d) { return Rational(n, d); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace reals
