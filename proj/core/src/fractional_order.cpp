#include "fracdiff/fractional_order.hpp"

#include <sstream>
#include <stdexcept>

#include "fracdiff/specfun.hpp"

namespace fracdiff {

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        std::ostringstream os;
        os << "FractionalOrder: alpha must lie strictly in (0,1), got " << alpha;
        throw std::domain_error(os.str());
    }
    gamma_1ma_ = specfun::gamma(1.0 - alpha);
    gamma_2ma_ = specfun::gamma(2.0 - alpha);
}

} // namespace fracdiff
