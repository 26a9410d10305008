#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "walshmeans/dyadic.hpp"

namespace walsh {

// A real function constant on the 2^N cells of the resolution-N grid.
// values[c] is the value on the cell with index c (x_0 most significant).
struct GridFunction {
    int resolution = 1;
    std::vector<double> values;

    explicit GridFunction(int resolution_);
    GridFunction(int resolution_, std::vector<double> values_);

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t c) const { return values[c]; }
    double& operator[](std::size_t c) { return values[c]; }
    double at(const DyadicPoint& x) const { return values[x.cell_index()]; }

    double integral() const;  // 2^(-N) * sum of values
};

// Walsh-Fourier coefficients of a GridFunction in Paley order.
struct Spectrum {
    int resolution = 1;
    std::vector<double> coeffs;

    explicit Spectrum(int resolution_);
    Spectrum(int resolution_, std::vector<double> coeffs_);

    std::size_t size() const { return coeffs.size(); }
    double operator[](std::size_t k) const { return coeffs[k]; }
    double& operator[](std::size_t k) { return coeffs[k]; }
};

std::size_t cells_at(int resolution);

void require_same_resolution(const GridFunction& f, const GridFunction& g);

}  // namespace walsh
