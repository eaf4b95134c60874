#include "diskfit/xcomplex.hpp"

#include <ostream>

namespace diskfit {

std::ostream& operator<<(std::ostream& os, const XComplex& z) {
    os << z.re.str(34);
    if (!(z.im < XReal(0))) os << "+";
    return os << z.im.str(34) << "i";
}

} // namespace diskfit
