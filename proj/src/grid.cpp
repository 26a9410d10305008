#include "walshmeans/grid.hpp"

#include <cmath>
#include <string>

namespace walsh {

std::size_t cells_at(int resolution) {
    detail::check_resolution(resolution);
    return std::size_t{1} << resolution;
}

GridFunction::GridFunction(int resolution_)
    : resolution(resolution_), values(cells_at(resolution_), 0.0) {}

GridFunction::GridFunction(int resolution_, std::vector<double> values_)
    : resolution(resolution_), values(std::move(values_)) {
    if (values.size() != cells_at(resolution)) {
        throw std::invalid_argument("grid length " + std::to_string(values.size()) +
                                    " does not match resolution " +
                                    std::to_string(resolution));
    }
}

double GridFunction::integral() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return std::ldexp(sum, -resolution);
}

Spectrum::Spectrum(int resolution_)
    : resolution(resolution_), coeffs(cells_at(resolution_), 0.0) {}

Spectrum::Spectrum(int resolution_, std::vector<double> coeffs_)
    : resolution(resolution_), coeffs(std::move(coeffs_)) {
    if (coeffs.size() != cells_at(resolution)) {
        throw std::invalid_argument("spectrum length does not match resolution");
    }
}

void require_same_resolution(const GridFunction& f, const GridFunction& g) {
    if (f.resolution != g.resolution) {
        throw std::invalid_argument("mismatched resolutions: " +
                                    std::to_string(f.resolution) + " vs " +
                                    std::to_string(g.resolution));
    }
}

}  // namespace walsh
