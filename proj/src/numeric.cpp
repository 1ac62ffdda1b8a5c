#include "csaw/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace csaw {

std::string format_real(const Real& x) {
    // Round-trip-exact scientific form at the working precision.
    return x.str(std::numeric_limits<Real>::max_digits10,
                 std::ios_base::scientific);
}

Real parse_real(const std::string& s) {
    try {
        return Real(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a real number: '" + s + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

} // namespace csaw
