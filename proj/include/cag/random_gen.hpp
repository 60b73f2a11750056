#ifndef CAG_RANDOM_GEN_HPP
#define CAG_RANDOM_GEN_HPP

#include <random>

#include "cag/morphisms.hpp"

namespace cag {

/// Seeded input generator for property runs. Not an oracle: it only builds
/// random presentations, points and morphisms.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long int_in(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    Rat rat(long max_abs = 5, long max_den = 4);
    Rat nonzero_rat(long max_abs = 5, long max_den = 4);

    GroupPresentation presentation(std::size_t max_n = 3, std::size_t max_m = 3,
                                   std::size_t max_bricks = 2, std::size_t max_power = 2);

    LaurentPoly laurent(RingSig sig, std::size_t max_terms = 6, long max_deg = 4);
    Unit unit(std::size_t m, bool coeff_one, long max_exp = 3);

    GroupPoint point(const GroupPresentation &g);

    /// Random pointed variety morphism g -> h.
    VarietyMorphism pointed_morphism(const GroupPresentation &g, const GroupPresentation &h);
    /// Random (not necessarily pointed) variety morphism.
    VarietyMorphism morphism(const GroupPresentation &g, const GroupPresentation &h);
    Homomorphism homomorphism(const GroupPresentation &g, const GroupPresentation &h);

    /// Random unimodular matrix as a product of elementary shears and swaps.
    IntMatrix unimodular(std::size_t k, int steps = 8);
    /// Random invertible rational matrix.
    RatMatrix invertible_rat(std::size_t k);

private:
    std::mt19937_64 rng_;
};

} // namespace cag

#endif
