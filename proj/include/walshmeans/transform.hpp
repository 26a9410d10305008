#pragma once

#include <span>

#include "walshmeans/grid.hpp"

namespace walsh {

// Walsh-Fourier analysis: coeffs[k] = 2^(-N) * sum_x f(x) w_k(x).
// O(2^N * N) in-place butterfly transform; exact on integer-valued input.
Spectrum analyze(const GridFunction& f);

// Unnormalized synthesis: f(x) = sum_k coeffs[k] w_k(x).
GridFunction synthesize(const Spectrum& s);

// S_n f: synthesis of the first n coefficients.  S_0 is the zero function,
// S_{2^N} recovers f.
GridFunction partial_sum(const Spectrum& s, std::uint64_t n);

namespace detail {

// In-place Walsh-Hadamard butterflies, coarse pairing first.  Processing the
// long strides before the short ones keeps the partial sums small when the
// input has block structure with heavy cancellation across the leading
// coordinates (the martingale grids of the divergence experiment).
void fwht_inplace(std::span<double> v);

// rev[i] = bit-reversal of i within `resolution` bits.
std::vector<std::uint64_t> bit_reversal_table(int resolution);

}  // namespace detail

}  // namespace walsh
