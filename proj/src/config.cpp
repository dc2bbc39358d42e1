#include "cutquant/config.hpp"

#include <stdexcept>

namespace cutquant {

namespace {
Rational g_hbar{1};
}

const Rational& hbar() { return g_hbar; }

void set_hbar(const Rational& value) {
    if (value <= Rational(0)) throw std::invalid_argument("hbar must be positive");
    g_hbar = value;
}

}  // namespace cutquant
