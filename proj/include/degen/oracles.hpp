#pragma once

#include "degen/curve.hpp"
#include "degen/lmhs.hpp"

namespace degen::oracles {

/// Weight filtration built from an explicit Jordan-chain basis of N: each
/// chain of length t contributes vectors N^j v of weight (t-1) - 2j, and
/// M_k is the span of all chain vectors of weight <= k. Independent of the
/// inductive quotient construction; same centered indexing
/// (entry j + dim = M_j).
std::vector<Subspace> jordan_filtration_centered(const ExactMatrix& n);

/// Jordan-basis route to the weight filtration of an endomorphism.
WeightFiltration weight_filtration_jordan(const NilpotentEndo& endo);

/// Term-by-term cover genus of a smooth curve: h^0(K) = g, then the raw
/// Euler-characteristic values k(2g-2) + (1-g) for k = 2..m.
long cover_pg_smooth_term_sum(int g, int m);

/// Term-by-term central cover genus: for each vertex, h^0(K) = g_i at level
/// one and the raw twisted values k(2g_i-2) + (k-1)d_i + (1-g_i) above.
long cover_pg_central_term_sum(const StableModel& model, int m);

} // namespace degen::oracles
