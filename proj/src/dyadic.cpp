#include "walshmeans/dyadic.hpp"

#include <bit>
#include <cmath>

namespace walsh {

namespace detail {

void check_resolution(int resolution) {
    if (resolution < 1 || resolution > kMaxResolution) {
        throw ResolutionError("resolution must be in [1, " +
                              std::to_string(kMaxResolution) + "], got " +
                              std::to_string(resolution));
    }
}

}  // namespace detail

DyadicPoint::DyadicPoint(std::uint64_t cell_index, int resolution)
    : cell_(cell_index), resolution_(resolution) {
    detail::check_resolution(resolution);
    if (cell_index >> resolution) {
        throw std::invalid_argument("cell index " + std::to_string(cell_index) +
                                    " out of range at resolution " +
                                    std::to_string(resolution));
    }
}

DyadicPoint DyadicPoint::basis(int k, int resolution) {
    detail::check_resolution(resolution);
    if (k < 0 || k >= resolution) {
        throw std::invalid_argument("basis coordinate out of range");
    }
    return {std::uint64_t{1} << (resolution - 1 - k), resolution};
}

DyadicPoint DyadicPoint::from_bits(const std::vector<int>& bits) {
    std::uint64_t cell = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("bits must be 0 or 1");
        cell = (cell << 1) | static_cast<std::uint64_t>(b);
    }
    return {cell, static_cast<int>(bits.size())};
}

int DyadicPoint::bit(int j) const {
    if (j < 0 || j >= resolution_) {
        throw std::invalid_argument("coordinate index out of range");
    }
    return static_cast<int>((cell_ >> (resolution_ - 1 - j)) & 1u);
}

std::uint64_t DyadicPoint::paley_mask() const {
    return reverse_bits(cell_, resolution_);
}

int PaleyIndex::top() const {
    if (n == 0) throw std::invalid_argument("top bit of 0 is undefined");
    return std::bit_width(n) - 1;
}

double DyadicInterval::measure() const {
    return std::ldexp(1.0, -depth);
}

bool DyadicInterval::contains(const DyadicPoint& x) const {
    if (depth > x.resolution()) return false;
    return (x.cell_index() >> (x.resolution() - depth)) == prefix;
}

std::pair<std::uint64_t, std::uint64_t> DyadicInterval::cell_range(
    int resolution) const {
    if (depth > resolution) throw std::invalid_argument("interval deeper than grid");
    const int shift = resolution - depth;
    return {prefix << shift, (prefix + 1) << shift};
}

DyadicPoint add_points(const DyadicPoint& x, const DyadicPoint& y) {
    if (x.resolution() != y.resolution()) {
        throw std::invalid_argument("mismatched resolutions in point addition");
    }
    return {x.cell_index() ^ y.cell_index(), x.resolution()};
}

int rademacher(int k, const DyadicPoint& x) {
    return x.bit(k) ? -1 : 1;  // (-1)^(x_k)
}

int walsh(PaleyIndex n, const DyadicPoint& x) {
    if (n.n >> x.resolution()) {
        throw ResolutionError("Walsh index " + std::to_string(n.n) +
                              " not constant on cells at resolution " +
                              std::to_string(x.resolution()));
    }
    // Parity of popcount of (index bits AND point bits in Paley layout).
    return (std::popcount(n.n & x.paley_mask()) & 1) ? -1 : 1;
}

DyadicInterval cell_of(const DyadicPoint& x, int depth) {
    if (depth < 0 || depth > x.resolution()) {
        throw std::invalid_argument("interval depth out of range");
    }
    return {depth, x.cell_index() >> (x.resolution() - depth)};
}

std::uint64_t reverse_bits(std::uint64_t v, int resolution) {
    std::uint64_t r = 0;
    for (int j = 0; j < resolution; ++j) {
        r = (r << 1) | ((v >> j) & 1u);
    }
    return r;
}

}  // namespace walsh
