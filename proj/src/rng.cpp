#include "dsp/rng.hpp"

namespace dsp {

ExactMatrix random_unimodular(int n, Rng& rng, long max_entry) {
    ExactMatrix lower = ExactMatrix::identity(n), upper = ExactMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i > j) lower.at(i, j) = Scalar(rng.range(-max_entry, max_entry));
            if (i < j) upper.at(i, j) = Scalar(rng.range(-max_entry, max_entry));
        }
    return lower * upper;
}

}  // namespace dsp
