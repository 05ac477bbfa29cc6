#pragma once

#include <gmpxx.h>

#include <string>

namespace hodge {

/**
 * @brief Exact Gaussian rational a + b*i with a, b in Q.
 *
 * Both parts are canonical mpq_class values, so equality is structural.
 */
class Gq {
public:
    Gq() = default;
    Gq(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Gq(const mpq_class& re, const mpq_class& im = 0) : re_(re), im_(im) {
        re_.canonicalize();
        im_.canonicalize();
    }

    /** @brief The imaginary unit. */
    static Gq i() { return Gq(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

    Gq conj() const { return Gq(re_, -im_); }
    Gq operator-() const { return Gq(-re_, -im_); }

    Gq& operator+=(const Gq& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Gq& operator-=(const Gq& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Gq& operator*=(const Gq& o);
    Gq& operator/=(const Gq& o);

    /** @brief i^k for any integer k. */
    static Gq i_pow(long k);

    /**
     * @brief Canonical text form: "a/b", "c/d*i" or "a/b+c/d*i".
     *
     * Denominators equal to one are omitted; zero prints as "0".
     */
    std::string to_string() const;

    /**
     * @brief Parse the canonical text form (whitespace tolerated).
     *
     * Accepts e.g. "3", "-1/2*i", "2+1/3*i", "i", "-i", "1/2i".
     * @throws ParseError on malformed input or zero denominators.
     */
    static Gq parse(const std::string& text);

    friend bool operator==(const Gq& a, const Gq& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Gq& a, const Gq& b) { return !(a == b); }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline Gq operator+(Gq a, const Gq& b) { return a += b; }
inline Gq operator-(Gq a, const Gq& b) { return a -= b; }
inline Gq operator*(Gq a, const Gq& b) { return a *= b; }
inline Gq operator/(Gq a, const Gq& b) { return a /= b; }

}  // namespace hodge
