#ifndef CUTQUANT_RATIONAL_HPP
#define CUTQUANT_RATIONAL_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace cutquant {

// Exact rational arithmetic for eigenvalues, theta angles and hbar.
// Kernel detection is an exact-equality question, so rationals are the
// default number type throughout; floats appear only in quadrature code
// and in the demo-only approximate operator mode.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return boost::rational_cast<double>(r);
}

inline Rational rational_abs(const Rational& r) {
    return r < Rational(0) ? -r : r;
}

// Largest integer <= r.
inline std::int64_t rational_floor(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

inline std::int64_t rational_ceil(const Rational& r) {
    return -rational_floor(-r);
}

// Unique decomposition r = n + theta with n integer and theta in (0,1].
// Integers land in the theta = 1 class.
struct FractionalClass {
    std::int64_t integer_part;
    Rational theta;
};

inline FractionalClass fractional_class(const Rational& r) {
    const std::int64_t n = rational_ceil(r) - 1;
    return {n, r - Rational(n)};
}

// Canonical "p/q" form; the denominator is always present and positive.
inline std::string format_rational(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& text) {
    const auto bad = [&text]() -> std::runtime_error {
        return std::runtime_error("not a rational \"p/q\": '" + text + "'");
    };
    if (text.empty()) throw bad();
    std::size_t pos = 0;
    std::int64_t num = 0, den = 1;
    try {
        num = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw bad();
    }
    if (pos != text.size()) {
        if (text[pos] != '/') throw bad();
        const std::string tail = text.substr(pos + 1);
        std::size_t tail_pos = 0;
        try {
            den = std::stoll(tail, &tail_pos);
        } catch (const std::exception&) {
            throw bad();
        }
        if (tail_pos != tail.size() || den == 0) throw bad();
    }
    return {num, den};
}

inline std::size_t rational_hash(const Rational& r) {
    const auto mix = [](std::size_t h, std::size_t v) {
        return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    };
    return mix(static_cast<std::size_t>(r.numerator()),
               static_cast<std::size_t>(r.denominator()));
}

}  // namespace cutquant

#endif
