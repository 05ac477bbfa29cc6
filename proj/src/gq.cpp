#include "hodge/gq.hpp"

#include <cctype>

#include "hodge/errors.hpp"

namespace hodge {

Gq& Gq::operator*=(const Gq& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

Gq& Gq::operator/=(const Gq& o) {
    if (o.is_zero()) throw Error("DivisionByZero", "division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class m = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

Gq Gq::i_pow(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return Gq(1);
        case 1: return Gq(0, 1);
        case 2: return Gq(-1);
        default: return Gq(0, -1);
    }
}

std::string Gq::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    if (sgn(im_) != 0) {
        std::string m = im_.get_str();
        if (!out.empty() && m[0] != '-') out += "+";
        out += m + "*i";
    }
    return out;
}

namespace {

// Parses an unsigned rational "a" or "a/b" starting at pos; empty means 1.
bool parse_unsigned_rational(const std::string& s, size_t& pos, mpq_class& out, bool& empty) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) {
        empty = true;
        out = 1;
        return true;
    }
    empty = false;
    std::string num = s.substr(start, pos - start);
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t ds = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == ds) return false;
        den = s.substr(ds, pos - ds);
    }
    mpz_class n(num), d(den);
    if (d == 0) return false;
    out = mpq_class(n, d);
    out.canonicalize();
    return true;
}

}  // namespace

Gq Gq::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty scalar");
    mpq_class re = 0, im = 0;
    bool seen_re = false, seen_im = false;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError("malformed scalar '" + text + "'");
        }
        mpq_class v;
        bool empty = false;
        if (!parse_unsigned_rational(s, pos, v, empty)) throw ParseError("malformed scalar '" + text + "'");
        bool imag = false;
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            if (pos >= s.size() || s[pos] != 'i' || empty) throw ParseError("malformed scalar '" + text + "'");
        }
        if (pos < s.size() && s[pos] == 'i') {
            imag = true;
            ++pos;
        } else if (empty) {
            throw ParseError("malformed scalar '" + text + "'");
        }
        if (imag) {
            if (seen_im) throw ParseError("duplicate imaginary part in '" + text + "'");
            seen_im = true;
            im = sign * v;
        } else {
            if (seen_re || seen_im) throw ParseError("malformed scalar '" + text + "'");
            seen_re = true;
            re = sign * v;
        }
    }
    return Gq(re, im);
}

}  // namespace hodge
