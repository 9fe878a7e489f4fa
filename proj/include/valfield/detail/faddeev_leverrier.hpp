#pragma once

#include <cstddef>
#include <vector>

#include "valfield/scalar.hpp"

namespace valfield::detail {

// Faddeev-LeVerrier recurrence over any commutative ring R containing Q:
//   M_0 = 0, c_d = 1,
//   M_k = A M_{k-1} + c_{d-k+1} I,   c_{d-k} = -tr(A M_k) / k.
// The only divisions are by the integers 1..d. `entries` is the d x d
// matrix in row-major order; `zero`/`one` are R's identities and
// `scale(r, s)` multiplies r by a field scalar. Returns c_0..c_d.
template <class R, class Scale>
std::vector<R> faddeev_leverrier(const std::vector<R>& entries, std::size_t d, const Field& field, const R& zero,
                                 const R& one, Scale scale) {
    std::vector<R> coeffs(d + 1, zero);
    coeffs[d] = one;
    std::vector<R> mk(d * d, zero);
    for (std::size_t k = 1; k <= d; ++k) {
        // M_k = A M_{k-1} + c_{d-k+1} I
        std::vector<R> next(d * d, zero);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l)
                for (std::size_t j = 0; j < d; ++j) next[i * d + j] = next[i * d + j] + entries[i * d + l] * mk[l * d + j];
        for (std::size_t i = 0; i < d; ++i) next[i * d + i] = next[i * d + i] + coeffs[d - k + 1];
        mk = std::move(next);

        R trace = zero;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l) trace = trace + entries[i * d + l] * mk[l * d + i];
        coeffs[d - k] = scale(trace, Scalar(field, mpq_class(mpz_class(-1), mpz_class(static_cast<unsigned long>(k)))));
    }
    return coeffs;
}

} // namespace valfield::detail
