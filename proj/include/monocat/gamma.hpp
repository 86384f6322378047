#pragma once

// The stable Auslander algebra Γ = ⊕_{a,b} stable-Hom(J_a, J_b), 1 <= a,b <= n-1,
// and modules over it. A contravariant Γ-module assigns V_a to J_a and lets
// φ: J_a -> J_b act V_b -> V_a; a covariant one lets it act V_a -> V_b.

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "monocat/lambda.hpp"
#include "monocat/rng.hpp"

namespace monocat {

enum class Variance { Contra, Co };

const char* variance_name(Variance v);

struct GammaBasisElement {
    unsigned a = 0, b = 0; // J_a -> J_b
    LambdaMorphism rep;
    FpVector w; // image of the generator e_0
};

class GammaAlgebra {
public:
    explicit GammaAlgebra(const RingCtx& ctx);

    const RingCtx& ctx() const { return ctx_; }
    unsigned stable_count() const { return ctx_.n - 1; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<GammaBasisElement>& basis() const { return basis_; }
    const GammaBasisElement& element(std::size_t i) const { return basis_[i]; }

    /// dim stable-Hom(J_a, J_b).
    std::size_t pair_dim(unsigned a, unsigned b) const { return pairs_[idx(a, b)].dim; }
    /// Global index of the first basis element of stable-Hom(J_a, J_b).
    std::size_t pair_offset(unsigned a, unsigned b) const { return pairs_[idx(a, b)].offset; }
    std::vector<std::vector<std::size_t>> dims() const;
    std::size_t identity_index(unsigned a) const { return identity_[a - 1]; }

    /// Coordinates (length pair_dim(a,b)) of the stable class of the morphism
    /// J_a -> J_b sending e_0 to w. Throws NotLinear if x^a w != 0.
    FpVector stable_coords(unsigned a, unsigned b, const FpVector& w) const;
    /// Basis of the maps J_a -> J_b factoring through a projective, as generator images.
    const std::vector<FpVector>& projective_maps(unsigned a, unsigned b) const {
        return pairs_[idx(a, b)].projective;
    }

    /// Coordinates of element(j) ∘ element(i) in the pair (a_i, b_j); empty
    /// when the pair is not composable.
    const FpVector& product(std::size_t i, std::size_t j) const { return mult_[i * basis_.size() + j]; }

private:
    struct Pair {
        std::size_t dim = 0, offset = 0;
        Subspace torsion;
        FpMatrix to_stable; // torsion coordinates -> stable coordinates
        std::vector<FpVector> projective;
    };
    std::size_t idx(unsigned a, unsigned b) const;
    void validate() const;

    RingCtx ctx_;
    std::vector<GammaBasisElement> basis_;
    std::vector<Pair> pairs_;
    std::vector<std::size_t> identity_;
    std::vector<FpVector> mult_;
};

/// Built once per ring context and shared; thread safe.
std::shared_ptr<const GammaAlgebra> gamma_algebra(const RingCtx& ctx);

/// Values and induced maps of a functor on the stable indecomposables.
/// `act(a, b, w)` is the matrix of F applied to the map J_a -> J_b with
/// e_0 ↦ w: V_b -> V_a for contravariant data, V_a -> V_b for covariant.
struct FunctorData {
    std::vector<std::size_t> dims; // dims[a-1] = dim F(J_a), a = 1..n-1
    std::function<FpMatrix(unsigned a, unsigned b, const FpVector& w)> act;
};

class GammaModule {
public:
    GammaModule() = default;
    /// Validates composition compatibility and identities.
    GammaModule(std::shared_ptr<const GammaAlgebra> alg, Variance var, std::vector<std::size_t> dims,
                std::vector<FpMatrix> actions);

    static GammaModule zero(std::shared_ptr<const GammaAlgebra> alg, Variance var);
    /// Builds from functor data, rejecting data where a projective-factoring
    /// map acts nonzero or functoriality fails (CompatibilityViolation).
    static GammaModule from_functor(std::shared_ptr<const GammaAlgebra> alg, Variance var, const FunctorData& data);

    const GammaAlgebra& algebra() const { return *alg_; }
    const std::shared_ptr<const GammaAlgebra>& algebra_ptr() const { return alg_; }
    Variance variance() const { return var_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t value_dim(unsigned a) const { return dims_[a - 1]; }
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    /// Action of basis element i.
    const FpMatrix& action(std::size_t i) const { return actions_[i]; }
    const std::vector<FpMatrix>& actions() const { return actions_; }
    /// Action of the morphism J_a -> J_b with e_0 ↦ w, through its stable class.
    FpMatrix act(unsigned a, unsigned b, const FpVector& w) const;

    /// Index a-1 of the source and target spaces of basis element i.
    std::size_t act_src(std::size_t i) const;
    std::size_t act_dst(std::size_t i) const;

private:
    std::shared_ptr<const GammaAlgebra> alg_;
    Variance var_ = Variance::Contra;
    std::vector<std::size_t> dims_;
    std::vector<FpMatrix> actions_;
};

GammaModule direct_sum(const GammaModule& a, const GammaModule& b);

/// A Γ-homomorphism: one matrix V1_a -> V2_a per stable indecomposable.
using GammaHom = std::vector<FpMatrix>;

/// Basis of Hom_Γ(G1, G2).
std::vector<GammaHom> intertwiners(const GammaModule& g1, const GammaModule& g2);
std::size_t hom_dim(const GammaModule& g1, const GammaModule& g2);
/// Whether the family of matrices commutes with every action.
bool is_homomorphism(const GammaModule& g1, const GammaModule& g2, const GammaHom& h);
/// Coordinates of h in an intertwiner basis, or nullopt.
std::optional<FpVector> gamma_hom_coordinates(const std::vector<GammaHom>& basis, const GammaHom& h);

enum class IsoOutcome { Iso, NotIso, Unknown };
const char* iso_name(IsoOutcome o);

struct IsoResult {
    IsoOutcome outcome = IsoOutcome::Unknown;
    std::optional<GammaHom> witness;
    std::string reason;
};

IsoResult iso_test(const GammaModule& g1, const GammaModule& g2, std::uint64_t seed = 0x5eed);

/// Searches the span of `basis` (families of square matrices of sizes `dims`)
/// for an invertible element: random trials, then exhaustive enumeration when
/// the span has at most 10^6 elements, then 64 more random trials.
IsoResult search_invertible(const std::vector<GammaHom>& basis, const std::vector<std::size_t>& dims,
                            std::uint32_t p, std::uint64_t seed);

/// (−, \underline{M}): values stable-Hom(J_a, M), contravariant.
GammaModule stable_representable_contra(std::shared_ptr<const GammaAlgebra> alg, const LambdaModule& m);
/// (\underline{M}, −): values stable-Hom(M, J_a), covariant.
GammaModule stable_representable_co(std::shared_ptr<const GammaAlgebra> alg, const LambdaModule& m);

} // namespace monocat
