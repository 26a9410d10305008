#include "walshmeans/transform.hpp"

#include <cmath>

namespace walsh {

namespace detail {

void fwht_inplace(std::span<double> v) {
    const std::size_t n = v.size();
    for (std::size_t len = n >> 1; len >= 1; len >>= 1) {
        for (std::size_t i = 0; i < n; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                const double a = v[j];
                const double b = v[j + len];
                v[j] = a + b;
                v[j + len] = a - b;
            }
        }
    }
}

std::vector<std::uint64_t> bit_reversal_table(int resolution) {
    const std::size_t n = cells_at(resolution);
    std::vector<std::uint64_t> rev(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        rev[i] = (rev[i >> 1] >> 1) | ((i & 1u) << (resolution - 1));
    }
    return rev;
}

}  // namespace detail

Spectrum analyze(const GridFunction& f) {
    const int n_res = f.resolution;
    std::vector<double> t = f.values;
    detail::fwht_inplace(t);
    // t[q] = sum_c f[c] (-1)^popcount(q & c); Paley index k pairs with the
    // bit-reversed position, and the Haar normalization lives here.
    const auto rev = detail::bit_reversal_table(n_res);
    Spectrum s(n_res);
    for (std::size_t q = 0; q < t.size(); ++q) {
        s.coeffs[rev[q]] = std::ldexp(t[q], -n_res);
    }
    return s;
}

GridFunction synthesize(const Spectrum& s) {
    const int n_res = s.resolution;
    const auto rev = detail::bit_reversal_table(n_res);
    std::vector<double> t(s.size());
    for (std::size_t q = 0; q < t.size(); ++q) {
        t[q] = s.coeffs[rev[q]];
    }
    detail::fwht_inplace(t);
    return {n_res, std::move(t)};
}

GridFunction partial_sum(const Spectrum& s, std::uint64_t n) {
    if (n > s.size()) {
        throw ResolutionError("partial sum order " + std::to_string(n) +
                              " exceeds 2^N = " + std::to_string(s.size()));
    }
    Spectrum head(s.resolution);
    for (std::uint64_t k = 0; k < n; ++k) head.coeffs[k] = s.coeffs[k];
    return synthesize(head);
}

}  // namespace walsh
