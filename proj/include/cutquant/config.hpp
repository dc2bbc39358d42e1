#ifndef CUTQUANT_CONFIG_HPP
#define CUTQUANT_CONFIG_HPP

#include "cutquant/rational.hpp"

namespace cutquant {

// hbar is a global configuration constant, default 1. All spectra scale
// linearly with it. Set it once at program start; the library never
// mutates it.
const Rational& hbar();
void set_hbar(const Rational& value);

}  // namespace cutquant

#endif
