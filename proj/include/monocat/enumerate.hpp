#pragma once

// Exhaustive enumeration of small objects for sweeps over tiny fields.

#include <vector>

#include "monocat/morph.hpp"

namespace monocat {

/// All Jordan types with parts <= n and total dimension <= max_dim, as JNF modules.
std::vector<LambdaModule> modules_upto(const RingCtx& ctx, unsigned max_dim);

/// All X-invariant subspaces of m. Throws InvalidArgument if p^dim > 2^16.
std::vector<Subspace> invariant_subspaces(const LambdaModule& m);

/// All invertible endomorphisms of m. Throws InvalidArgument if p^dim End > 2^16.
std::vector<FpMatrix> automorphisms(const LambdaModule& m);

/// One S-object A ↪ B per isomorphism class with dim B <= max_dim: inclusions
/// of Aut(B)-orbit representatives of submodules.
std::vector<MorphObject> enumerate_monos(const RingCtx& ctx, unsigned max_dim);

/// One F-object per isomorphism class with dim of the source <= max_dim.
std::vector<MorphObject> enumerate_epis(const RingCtx& ctx, unsigned max_dim);

} // namespace monocat
