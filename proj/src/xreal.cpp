#include "diskfit/xreal.hpp"

#include <ostream>
#include <vector>

namespace diskfit {

XReal XReal::parse(const std::string& s) {
    return XReal(strtoflt128(s.c_str(), nullptr));
}

std::string XReal::str(int digits) const {
    if (digits < 1) digits = 1;
    if (digits > 36) digits = 36;
    char fmt[16];
    snprintf(fmt, sizeof fmt, "%%.%dQe", digits - 1);
    std::vector<char> buf(64 + digits);
    quadmath_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

XReal pow_int(XReal base, long n) {
    if (n < 0) return XReal(1) / pow_int(base, -n);
    XReal acc(1), b = base;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const XReal& x) {
    return os << x.str(34);
}

} // namespace diskfit
