#pragma once

namespace fracdiff {

// Order alpha of the time-fractional derivative, restricted to (0,1),
// together with the two gamma-function constants every discretization needs.
class FractionalOrder {
public:
    explicit FractionalOrder(double alpha);

    double alpha() const noexcept { return alpha_; }
    double gamma_1ma() const noexcept { return gamma_1ma_; } // Gamma(1-alpha)
    double gamma_2ma() const noexcept { return gamma_2ma_; } // Gamma(2-alpha)

private:
    double alpha_;
    double gamma_1ma_;
    double gamma_2ma_;
};

} // namespace fracdiff
