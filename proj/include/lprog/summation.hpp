#pragma once

#include <cmath>
#include <complex>

namespace lprog {

// Kahan–Neumaier compensated accumulator. Terms must be added in a fixed
// order for results to be reproducible to the last bit.
class NeumaierSum {
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    NeumaierSum& operator+=(double x) noexcept
    {
        add(x);
        return *this;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexNeumaierSum {
public:
    void add(std::complex<double> z) noexcept
    {
        re_.add(z.real());
        im_.add(z.imag());
    }

    ComplexNeumaierSum& operator+=(std::complex<double> z) noexcept
    {
        add(z);
        return *this;
    }

    std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

private:
    NeumaierSum re_;
    NeumaierSum im_;
};

} // namespace lprog
