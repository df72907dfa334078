#pragma once

#include "degen/lmhs.hpp"
#include "degen/surgery.hpp"

#include <random>
#include <vector>

namespace degen::gen {

/// Deterministic random source for the property suites.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    int uniform(int lo, int hi); // inclusive
    Rational small_rational();   // small numerator/denominator, nonzero possible
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// Random nilpotent rational matrix: a random Jordan type conjugated by a
/// random integer unimodular matrix (product of elementary shears).
ExactMatrix random_nilpotent(Rng& rng, std::size_t dim);

/// A polarized limiting mixed Hodge structure assembled from model blocks of
/// one weight, conjugated by a random rational isometry of the pairing, plus
/// the frame spanning F^n. expected_degree is the block-level sum the norm
/// determinant must realize.
struct RandomLmhs {
    LimitingMixedHodge lmhs;
    std::vector<std::vector<GaussianRational>> frame;
    unsigned expected_degree = 0;
    bool expected_nf_annihilation = false;
};

RandomLmhs random_lmhs_fixture(Rng& rng, std::size_t max_dim);

/// Random consistent surgery input.
SurgeryDatum random_surgery_datum(Rng& rng);

/// Rational isometry of the pairing (Cayley transform of a random
/// infinitesimal isometry). Satisfies S^T Q S = Q exactly.
ExactMatrix random_isometry(Rng& rng, const ExactMatrix& q, unsigned weight);

} // namespace degen::gen
