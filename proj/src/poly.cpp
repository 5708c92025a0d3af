#include "meixner/poly.hpp"

namespace meixner {

std::string to_string(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const Rat& c = p.coeff(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rat mag = c.abs();
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = mag == Rat(1);
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (!unit) out += mag.str() + "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace meixner
