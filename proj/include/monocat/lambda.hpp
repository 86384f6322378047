#pragma once

// Finite-dimensional modules over the truncated polynomial ring
// Λ_n = k[x]/(x^n), k = GF(p). A module is a k-vector space with a nilpotent
// action matrix X (X^n = 0); a morphism is a matrix commuting with the actions.
//
// Conventions used throughout:
//   * J_a = Λ/(x^a) has basis e_0..e_{a-1} with x e_i = e_{i+1} (lower shift).
//     Its generator is e_0 and its socle is spanned by e_{a-1}.
//   * A morphism J_a -> N is determined by the image v of e_0, which may be
//     any v with X_N^a v = 0; the morphism matrix is [v, Xv, ..., X^{a-1}v].
//     Hence Hom(J_a, N) is identified with ker(X_N^a) ⊆ N.
//   * J_a ⊗ N is identified with N / x^a N.
//   * Λ is commutative, so left and right modules coincide.

#include <memory>
#include <optional>
#include <vector>

#include "monocat/exactla.hpp"

namespace monocat {

struct RingCtx {
    std::uint32_t p = 2;
    unsigned n = 1;

    RingCtx() = default;
    RingCtx(std::uint32_t p, unsigned n);
    bool operator==(const RingCtx&) const = default;
};

/// Multiset of Jordan block sizes, sorted descending.
struct JordanType {
    std::vector<unsigned> blocks;
    unsigned dim() const;
    bool operator==(const JordanType&) const = default;
};

/// A basis adapted to a decomposition into Jordan blocks: for each generator
/// g_i of block size a_i the columns g_i, X g_i, ..., X^{a_i-1} g_i appear
/// consecutively in `change`.
struct JordanBasis {
    std::vector<unsigned> sizes;
    std::vector<FpVector> generators;
    FpMatrix change;
    FpMatrix change_inverse;
};

class LambdaModule {
public:
    LambdaModule() = default;
    /// Throws NotLinear if X is not square or X^n != 0.
    LambdaModule(const RingCtx& ctx, FpMatrix x);

    static LambdaModule zero(const RingCtx& ctx);

    const RingCtx& ctx() const { return ctx_; }
    std::size_t dim() const { return x_.rows(); }
    const FpMatrix& action() const { return x_; }
    std::uint32_t p() const { return ctx_.p; }

    /// Cached; computed on first use and shared between copies.
    const JordanBasis& jordan_basis() const;

private:
    struct Cache;
    RingCtx ctx_;
    FpMatrix x_;
    std::shared_ptr<Cache> cache_;
};

class LambdaMorphism {
public:
    LambdaMorphism() = default;
    /// Throws NotLinear unless f X_src = X_dst f.
    LambdaMorphism(LambdaModule src, LambdaModule dst, FpMatrix f);

    const LambdaModule& src() const { return src_; }
    const LambdaModule& dst() const { return dst_; }
    const FpMatrix& matrix() const { return f_; }

    bool is_injective() const { return rank(f_) == src_.dim(); }
    bool is_surjective() const { return rank(f_) == dst_.dim(); }
    bool is_zero() const { return f_.is_zero(); }

    static LambdaMorphism identity(const LambdaModule& m);
    static LambdaMorphism zero(const LambdaModule& src, const LambdaModule& dst);

private:
    LambdaModule src_;
    LambdaModule dst_;
    FpMatrix f_;
};

void require_same_ctx(const RingCtx& a, const RingCtx& b, const char* op);

// ------------------------------------------------------------------ morphism algebra

/// g ∘ f
LambdaMorphism compose(const LambdaMorphism& g, const LambdaMorphism& f);
LambdaMorphism add(const LambdaMorphism& f, const LambdaMorphism& g);
LambdaMorphism scale(const LambdaMorphism& f, std::uint32_t c);
/// f ⊕ g : A ⊕ C -> B ⊕ D
LambdaMorphism direct_sum(const LambdaMorphism& f, const LambdaMorphism& g);
/// [f g] : A ⊕ B -> C
LambdaMorphism row_join(const LambdaMorphism& f, const LambdaMorphism& g);
/// [f; g] : A -> B ⊕ C
LambdaMorphism col_join(const LambdaMorphism& f, const LambdaMorphism& g);

// ------------------------------------------------------------------ modules

LambdaModule direct_sum(const LambdaModule& a, const LambdaModule& b);
LambdaModule jordan_block(const RingCtx& ctx, unsigned a);
/// Block-diagonal Jordan normal form with blocks in the given order.
LambdaModule from_blocks(const RingCtx& ctx, const std::vector<unsigned>& blocks);
/// Λ^t
LambdaModule free_module(const RingCtx& ctx, unsigned t);

JordanType jordan_type(const LambdaModule& m);
/// Jordan normal form, blocks sorted descending.
LambdaModule canonical(const LambdaModule& m);
bool is_isomorphic(const LambdaModule& a, const LambdaModule& b);
/// Drops blocks of size n (projective summands).
JordanType stable_type(const JordanType& t, unsigned n);
bool is_projective(const LambdaModule& m);

/// Conjugates the action by an invertible matrix: X' = T^{-1} X T.
LambdaModule conjugate(const LambdaModule& m, const FpMatrix& t);

// ------------------------------------------------------------------ sub and quotient modules

struct Submodule {
    LambdaModule module;
    LambdaMorphism inclusion;
};

struct Quotient {
    LambdaModule module;
    LambdaMorphism projection;
    FpMatrix section; // k-linear right inverse of the projection
};

/// Submodule on an X-invariant subspace. Throws NotLinear if not invariant.
Submodule submodule(const LambdaModule& m, const Subspace& s);
/// Quotient by an X-invariant subspace.
Quotient quotient(const LambdaModule& m, const Subspace& s);
/// Smallest submodule containing the given vectors.
Subspace generated_submodule(const LambdaModule& m, const FpMatrix& generators);

Submodule kernel(const LambdaMorphism& f);
Submodule image(const LambdaMorphism& f);
Quotient cokernel(const LambdaMorphism& f);

/// ker X^a: identified with Hom(J_a, N).
Subspace torsion(const LambdaModule& m, unsigned a);
/// x^a N
Subspace radical_power(const LambdaModule& m, unsigned a);
/// p_w(X) = sum_k w_k X^k
FpMatrix poly_action(const LambdaModule& m, const FpVector& w);
/// The morphism J_a -> N sending e_0 to v.
LambdaMorphism from_generator(const LambdaModule& n, unsigned a, const FpVector& v);

// ------------------------------------------------------------------ Hom and friends

/// Basis of Hom_Λ(M, N). Ordering: for each Jordan generator g_i of M (in
/// jordan_basis order), the canonical basis of ker(X_N^{a_i}) as images of g_i.
std::vector<LambdaMorphism> hom_basis(const LambdaModule& m, const LambdaModule& n);
std::size_t hom_dim(const LambdaModule& m, const LambdaModule& n);
/// Columns are row-major vectorizations of the basis morphisms.
FpMatrix vectorize(const std::vector<LambdaMorphism>& maps, std::size_t rows, std::size_t cols,
                   std::uint32_t p);

struct ProjectiveCover {
    LambdaModule projective;
    LambdaMorphism cover;
};
ProjectiveCover projective_cover(const LambdaModule& m);

struct InjectiveEnvelope {
    LambdaModule injective;
    LambdaMorphism embedding;
};
InjectiveEnvelope injective_envelope(const LambdaModule& m);

/// Ω(M) = ker of the projective cover, with its inclusion (not canonicalized).
Submodule syzygy_inclusion(const LambdaModule& m);
LambdaModule syzygy(const LambdaModule& m);
LambdaModule cosyzygy(const LambdaModule& m);

/// k-linear dual; action X^t.
LambdaModule dual(const LambdaModule& m);
/// The antidiagonal isomorphism dual(J_a) -> J_a.
FpMatrix reversal(std::size_t a, std::uint32_t p);

struct Tensor {
    LambdaModule module;
    FpMatrix proj; // from M ⊗_k N (row-major index i*dim N + j)
};
Tensor tensor(const LambdaModule& m, const LambdaModule& n);

struct Tor1 {
    std::size_t dim = 0;
    Subspace cycles_complement; // inside M ⊗ P_1 = M^{t_1}
};
Tor1 tor1(const LambdaModule& m, const LambdaModule& n);

struct StableHom {
    std::vector<LambdaMorphism> hom;       // basis of Hom(M,N)
    Subspace projective_part;              // P(M,N) in hom coordinates
    std::vector<LambdaMorphism> basis_reps; // coset representatives
    FpMatrix proj_coords;                   // hom coordinates -> stable coordinates
    std::size_t dim() const { return basis_reps.size(); }
};
StableHom stable_hom(const LambdaModule& m, const LambdaModule& n);

/// Coordinates of `f` in the basis `hom` (as produced by hom_basis).
FpVector hom_coordinates(const std::vector<LambdaMorphism>& hom, const LambdaMorphism& f);

/// Entries of a morphism between free modules Λ^m -> Λ^t (both in the
/// standard basis produced by free_module) as polynomials: entry (i,j) is the
/// coefficient vector of the image of generator j in summand i.
std::vector<std::vector<FpVector>> lambda_entries(const LambdaMorphism& f);
/// The k-matrix of the Λ-matrix `entries` (t x m) acting on M^m -> M^t.
FpMatrix apply_lambda_matrix(const LambdaModule& m, const std::vector<std::vector<FpVector>>& entries,
                             std::size_t rows, std::size_t cols);

struct ProjectivePresentation {
    LambdaMorphism relations; // Λ^m -> Λ^t
    LambdaMorphism cover;     // Λ^t -> M
};
/// Minimal projective presentation Λ^m -> Λ^t -> M -> 0.
ProjectivePresentation minimal_presentation(const LambdaModule& m);

struct InjectiveCopresentation {
    LambdaMorphism embedding; // M -> I^0
    LambdaMorphism map;       // I^0 -> I^1
};
InjectiveCopresentation minimal_copresentation(const LambdaModule& m);

/// Auslander-Bridger transpose via the dual of the minimal presentation,
/// returned in canonical form.
LambdaModule transpose(const LambdaModule& m);

/// Finds s: Y -> I with s ∘ incl = target, for I injective (always solvable).
LambdaMorphism extend_to_injective(const LambdaMorphism& incl, const LambdaMorphism& target);
/// Finds t: P -> Y with epi ∘ t = target, for P projective (always solvable).
LambdaMorphism lift_from_projective(const LambdaMorphism& epi, const LambdaMorphism& target);

} // namespace monocat
