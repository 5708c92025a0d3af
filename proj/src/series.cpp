#include "meixner/series.hpp"

namespace meixner {

RatSeries real_series(const Series<CRat>& s) {
    std::vector<Rat> c;
    c.reserve(s.order() + 1);
    for (std::size_t k = 0; k <= s.order(); ++k) {
        if (!s[k].is_real()) {
            throw MathError("series coefficient " + std::to_string(k) + " is not real: " + s[k].str());
        }
        c.push_back(s[k].re());
    }
    return RatSeries(std::move(c));
}

RatSeries rational_series(const Series<Surd>& s) {
    std::vector<Rat> c;
    c.reserve(s.order() + 1);
    for (std::size_t k = 0; k <= s.order(); ++k) c.push_back(s[k].to_rat());
    return RatSeries(std::move(c));
}

}  // namespace meixner
