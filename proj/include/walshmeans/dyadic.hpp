#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace walsh {

// Raised when an index or count is not representable at the working
// resolution (e.g. a Walsh index that is not constant on the grid cells).
class ResolutionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxResolution = 30;

namespace detail {
void check_resolution(int resolution);
}

// A point of the dyadic group truncated to its first `resolution` coordinate
// bits (x_0, ..., x_{N-1}).  Stored as the cell index sum x_j * 2^(N-1-j),
// so x_0 is the most significant bit and group addition is a plain XOR.
// Immutable value type.
class DyadicPoint {
public:
    DyadicPoint(std::uint64_t cell_index, int resolution);

    static DyadicPoint zero(int resolution) { return {0, resolution}; }
    static DyadicPoint basis(int k, int resolution);  // e_k
    static DyadicPoint from_bits(const std::vector<int>& bits);

    int resolution() const { return resolution_; }
    int bit(int j) const;  // x_j

    // Index of the cell I_N(x) this point identifies, x_0 most significant.
    std::uint64_t cell_index() const { return cell_; }

    // The same bits with x_j at position j (x_0 least significant); this is
    // the layout that pairs with the binary digits of a Paley index.
    std::uint64_t paley_mask() const;

    friend bool operator==(const DyadicPoint& a, const DyadicPoint& b) {
        return a.resolution_ == b.resolution_ && a.cell_ == b.cell_;
    }

private:
    std::uint64_t cell_;
    int resolution_;
};

// Index of a Walsh function in Paley enumeration.
struct PaleyIndex {
    std::uint64_t n = 0;

    int bit(int j) const { return static_cast<int>((n >> j) & 1u); }
    // Position of the highest set bit; n must be nonzero.
    int top() const;
};

// The dyadic interval I_depth(x): all points sharing the first `depth`
// coordinate bits, identified by that prefix.
struct DyadicInterval {
    int depth = 0;
    std::uint64_t prefix = 0;  // first `depth` bits, x_0 most significant

    double measure() const;  // 2^(-depth)
    bool contains(const DyadicPoint& x) const;
    // Half-open range of cell indices covered at resolution N.
    std::pair<std::uint64_t, std::uint64_t> cell_range(int resolution) const;
};

// Coordinatewise mod-2 addition; every point is its own inverse.
DyadicPoint add_points(const DyadicPoint& x, const DyadicPoint& y);

// r_k(x) = (-1)^(x_k).
int rademacher(int k, const DyadicPoint& x);

// w_n(x), the product of r_k(x) over the set bits of n; requires n < 2^N so
// that w_n is constant on the resolution-N cells.
int walsh(PaleyIndex n, const DyadicPoint& x);

// The interval I_n(x) as a (depth, prefix) identifier.
DyadicInterval cell_of(const DyadicPoint& x, int depth);

// Reverse the low `resolution` bits (cell index <-> Paley layout).
std::uint64_t reverse_bits(std::uint64_t v, int resolution);

}  // namespace walsh
