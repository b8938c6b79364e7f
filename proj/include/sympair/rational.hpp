#pragma once

#include <gmpxx.h>

#include <string>

#include "json.hpp"

namespace sympair {

using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize; this does.
inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Element of Q(i): a complex number with exact rational real and imaginary parts.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long v) : re(v), im(0) {}
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return {re, -im}; }

    /// |z|^2 = re^2 + im^2, an exact nonnegative rational.
    Rat norm2() const { return re * re + im * im; }

    GaussRat operator-() const { return {-re, -im}; }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        Rat n2 = o.norm2();
        if (n2 == 0) throw std::domain_error("division by zero GaussRat");
        Rat r = (re * o.re + im * o.im) / n2;
        Rat i = (im * o.re - re * o.im) / n2;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    /// "0", "3/2", "i", "-i", "2i", "1+i", "1/2-3/4i"
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (re != 0) out += re.get_str();
        if (im != 0) {
            if (im == 1)
                out += out.empty() ? "i" : "+i";
            else if (im == -1)
                out += "-i";
            else {
                if (!out.empty() && im > 0) out += "+";
                out += im.get_str() + "i";
            }
        }
        return out;
    }
};

namespace detail {

inline nlohmann::json mpz_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return nlohmann::json(z.get_si());
    return nlohmann::json(z.get_str());
}

inline mpz_class mpz_from_json(const nlohmann::json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(static_cast<long>(j.get<long long>()));
}

}  // namespace detail

/// Serialized as [re_num, re_den, im_num, im_den].
inline nlohmann::json to_json(const GaussRat& g) {
    return nlohmann::json::array({detail::mpz_to_json(g.re.get_num()),
                                  detail::mpz_to_json(g.re.get_den()),
                                  detail::mpz_to_json(g.im.get_num()),
                                  detail::mpz_to_json(g.im.get_den())});
}

inline GaussRat gaussrat_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("GaussRat JSON must be [re_num, re_den, im_num, im_den]");
    Rat re(detail::mpz_from_json(j[0]), detail::mpz_from_json(j[1]));
    Rat im(detail::mpz_from_json(j[2]), detail::mpz_from_json(j[3]));
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

}  // namespace sympair
