#pragma once

// Finitely presented functors on Λ-mod.
//
//   ContraFunctor: F = Cok((−,A) --(−,u)--> (−,B)) for u: A -> B.
//   CoFunctor:     G = Ker(−⊗E⁰ --(−⊗v)--> −⊗E¹) for v: E⁰ -> E¹.
//
// Values at the indecomposables J_1..J_n are computed on construction:
// Hom(J_a, B) = ker X_B^a and J_a ⊗ E = E / x^a E. A map φ: J_a -> J_b with
// e_0 ↦ w acts through p_w(X) on the underlying modules.

#include <memory>
#include <vector>

#include "monocat/gamma.hpp"
#include "monocat/lambda.hpp"

namespace monocat {

class ContraFunctor {
public:
    ContraFunctor() = default;
    explicit ContraFunctor(LambdaMorphism u);

    /// (−, M)
    static ContraFunctor representable(const LambdaModule& m);

    const LambdaMorphism& pres() const { return u_; }
    const RingCtx& ctx() const { return u_.src().ctx(); }

    /// dim F(J_a), a = 1..n.
    std::size_t value_dim(unsigned a) const;
    std::vector<std::size_t> dims() const;
    /// F(φ): F(J_b) -> F(J_a) for φ: J_a -> J_b, e_0 ↦ w.
    FpMatrix act(unsigned a, unsigned b, const FpVector& w) const;
    /// dim F(T) for an arbitrary module.
    std::size_t eval_dim(const LambdaModule& t) const;

    /// Value basis vector k at J_a, as an element of ker X_B^a ⊆ B.
    FpVector value_rep(unsigned a, std::size_t k) const;
    /// Coordinates in F(J_a) of the class of v ∈ ker X_B^a.
    FpVector value_coords(unsigned a, const FpVector& v) const;

    /// Values and actions on J_1..J_n.
    FunctorData data() const;
    /// Restriction to J_1..J_{n-1}.
    FunctorData stable_data() const;
    /// Throws CompatibilityViolation if F does not vanish on projectives.
    GammaModule to_gamma(std::shared_ptr<const GammaAlgebra> alg) const;

private:
    struct Value {
        Subspace torsion; // ker X_B^a
        Cokernel cok;     // torsion coordinates -> F(J_a)
    };
    LambdaMorphism u_;
    std::shared_ptr<const std::vector<Value>> values_;
};

class CoFunctor {
public:
    CoFunctor() = default;
    explicit CoFunctor(LambdaMorphism v);

    const LambdaMorphism& copres() const { return v_; }
    const RingCtx& ctx() const { return v_.src().ctx(); }

    std::size_t value_dim(unsigned a) const;
    std::vector<std::size_t> dims() const;
    /// G(φ): G(J_a) -> G(J_b) for φ: J_a -> J_b, e_0 ↦ w.
    FpMatrix act(unsigned a, unsigned b, const FpVector& w) const;
    std::size_t eval_dim(const LambdaModule& t) const;

    /// Value basis vector k at J_a, lifted to E⁰.
    FpVector value_rep(unsigned a, std::size_t k) const;
    /// Coordinates in G(J_a) of the class of v ∈ E⁰ modulo x^a E⁰.
    FpVector value_coords(unsigned a, const FpVector& v) const;

    FunctorData data() const;
    FunctorData stable_data() const;
    GammaModule to_gamma(std::shared_ptr<const GammaAlgebra> alg) const;

private:
    struct Value {
        Cokernel quotient; // E⁰ -> E⁰ / x^a E⁰
        Subspace kernel;   // G(J_a) inside the quotient coordinates
    };
    LambdaMorphism v_;
    std::shared_ptr<const std::vector<Value>> values_;
};

// ------------------------------------------------------------------ natural transformations

/// Basis of Nat(F, G) for functor tables on J_1..J_k of the given variance;
/// naturality is imposed for a basis of every Hom(J_a, J_b).
std::vector<GammaHom> nat_basis(const RingCtx& ctx, Variance var, const FunctorData& f, const FunctorData& g);
/// Isomorphism of functor tables (same outcome semantics as iso_test).
IsoResult functor_iso(const RingCtx& ctx, Variance var, const FunctorData& f, const FunctorData& g,
                      std::uint64_t seed = 0x5eed);

/// A subfunctor K of (−, L) given by K(J_c) ⊆ ker X_L^c for c = 1..n.
/// Returns f: E -> L with image (−, f) = K. With `minimal`, E has one J_c
/// summand per generator of K(J_c) modulo its radical; otherwise one per
/// basis vector.
LambdaMorphism cover_subfunctor(const LambdaModule& l, const std::vector<Subspace>& k, bool minimal);

/// Minimal presentation of the same functor.
ContraFunctor minimize(const ContraFunctor& f);

// ------------------------------------------------------------------ flat resolutions and recollements

struct FlatResolution {
    LambdaMorphism g; // E₁ -> E₀, mono
    LambdaMorphism f; // E₀ -> L
    bool minimized = false;
};

/// 0 -> (−,E₁) -> (−,E₀) -> (−,L) -> F -> 0, exactness validated at every J_a.
FlatResolution special_flat_resolution(const ContraFunctor& f, bool minimize_first = false);

/// ν(F) = Cok(E₀ -> L), in Jordan normal form.
LambdaModule nu(const ContraFunctor& f);
/// L(M): the functor presented by the minimal projective presentation of M.
ContraFunctor L0(const LambdaModule& m);
/// Cok(ε_F: L(ν F) -> F) as a functor on all of Λ-mod.
ContraFunctor i_lambda_functor(const ContraFunctor& f);
/// i_λ(F), restricted to the stable indecomposables.
GammaModule i_lambda(const ContraFunctor& f, std::shared_ptr<const GammaAlgebra> alg);
/// F₀ = Cok((−,E₀) -> (−,Im f)).
ContraFunctor i_rho(const ContraFunctor& f);

/// −⊗M
CoFunctor t(const LambdaModule& m);
/// ϑ(G) = G(Λ) = Ker(E⁰ -> E¹), in Jordan normal form.
LambdaModule theta_eval(const CoFunctor& g);
/// The functor copresented by the minimal injective copresentation of M.
CoFunctor R0(const LambdaModule& m);
/// Ker(η_G: G -> R₀(ϑ G)) as a functor on all of Λ-mod.
CoFunctor j_rho_functor(const CoFunctor& g);
/// j_ρ(G), restricted to the stable indecomposables.
GammaModule j_rho(const CoFunctor& g, std::shared_ptr<const GammaAlgebra> alg);

struct JLambda {
    CoFunctor f0; // Ker(−⊗Im v -> −⊗E¹): the value of j_λ
    CoFunctor f1; // Ker(−⊗Ker v -> −⊗E⁰)
};
/// Validates 0 -> t(Ker v)/F¹ -> G -> F⁰ -> 0 at every J_a.
JLambda j_lambda(const CoFunctor& g);

} // namespace monocat
