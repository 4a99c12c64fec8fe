#include "jcq/units.hpp"

#include <cmath>
#include <string>

#include "jcq/errors.hpp"

namespace jcq::units {

double thermal_beta(double temperature_mk) {
    if (!(temperature_mk > 0.0)) {
        throw DomainError("temperature must be positive, got " + std::to_string(temperature_mk) + " mK");
    }
    if (std::isinf(temperature_mk)) return 0.0;
    return 1.0 / (k_b * temperature_mk);
}

} // namespace jcq::units
