#include "penlab/rng.hpp"

#include <stdexcept>

namespace penlab {

GaussianRational randomScalar(Rng& rng, long bound, bool realOnly) {
    if (bound < 1) throw std::invalid_argument("randomScalar: bound must be >= 1");
    const Rational re(rng.uniformInt(-bound, bound), rng.uniformInt(1, bound));
    if (realOnly) return GaussianRational(re);
    const Rational im(rng.uniformInt(-bound, bound), rng.uniformInt(1, bound));
    return GaussianRational(re, im);
}

}  // namespace penlab
