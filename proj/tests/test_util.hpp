#pragma once

#include <doctest.h>

#include <complex>
#include <sstream>

namespace doctest {
template <>
struct StringMaker<std::complex<double>> {
    static String convert(const std::complex<double>& c)
    {
        std::ostringstream os;
        os.precision(17);
        os << '(' << c.real() << ", " << c.imag() << ')';
        return os.str().c_str();
    }
};
} // namespace doctest
