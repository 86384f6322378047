#pragma once

// The functors from morphism categories to Γ-modules:
//
//   Ψ(X ↪f Y)  = Cok((−,Y) -> (−,Cok f))           contravariant, kills V
//   Φ(Y ↠g Z)  = Ker(−⊗Ker g -> −⊗Y)              covariant, kills U
//   Θ(X ↪f Y)  = Cok((−,P⊕X) --[d₁ f]--> (−,Y))    contravariant, kills X
//   ℑ(Y ↠g Z)  = Ker(−⊗Y --[g; s]--> −⊗(Z⊕I))      covariant, kills Y
//
// with every value restricted to the stable indecomposables J_1..J_{n-1}.
// A square (σ₁, σ₂) acts on values through the induced map on the module the
// functor is evaluated on (Cok f, Y, Ker g or Y respectively).

#include <optional>

#include "monocat/funcat.hpp"
#include "monocat/morph.hpp"

namespace monocat {

/// Σ(f) = Cok((−,f)).
ContraFunctor sigma(const MorphObject& o);
/// Σ′(g) = Ker(−⊗g).
CoFunctor sigma_prime(const MorphObject& o);

ContraFunctor psi_functor(const MorphObject& s);
CoFunctor phi_functor(const MorphObject& f);
ContraFunctor theta_functor(const MorphObject& s);
CoFunctor im_functor_raw(const MorphObject& f);

GammaModule psi(const MorphObject& s);
GammaModule phi(const MorphObject& f);
GammaModule theta(const MorphObject& s);
GammaModule im_functor(const MorphObject& f);

GammaHom psi_map(const MorphMap& h);
GammaHom phi_map(const MorphMap& h);
GammaHom theta_map(const MorphMap& h);
GammaHom im_map(const MorphMap& h);

/// The linear map Hom_H(o1, o2) -> Hom_Γ(F o1, F o2) in the bases hom_h and
/// intertwiners.
struct HomMap {
    std::vector<MorphMap> source;
    std::vector<GammaHom> target;
    FpMatrix matrix; // target.size() x source.size()

    bool surjective() const { return rank(matrix) == target.size(); }
    /// In hom_h coordinates.
    Subspace kernel() const { return kernel_basis(matrix); }
};

enum class Bridge { Psi, Phi, Theta, Im };

const char* bridge_name(Bridge b);
Bridge parse_bridge(const std::string& s);
/// The ideal whose objects the functor kills.
Ideal kernel_ideal(Bridge b);
/// S for Ψ and Θ, F for Φ and ℑ.
Kind bridge_kind(Bridge b);

GammaModule apply(Bridge b, const MorphObject& o);
GammaHom apply(Bridge b, const MorphMap& h);
HomMap hom_map(Bridge b, const MorphObject& o1, const MorphObject& o2);

inline HomMap psi_hom_map(const MorphObject& s1, const MorphObject& s2) { return hom_map(Bridge::Psi, s1, s2); }
inline HomMap phi_hom_map(const MorphObject& f1, const MorphObject& f2) { return hom_map(Bridge::Phi, f1, f2); }

/// An S-object (E₁ ↪ E₀) with Ψ(result) ≅ G and Cok = L. The non-minimal
/// choice takes L = ⊕ J_a^{dim G(J_a)} and one J_a in E₀ per basis vector of
/// the kernel subfunctor at J_a; `minimal` uses generators modulo radicals
/// for both.
MorphObject psi_inverse(const GammaModule& g, bool minimal = false);

/// Ξ = Φ ∘ Cok ∘ Ψ⁻¹. With `validate`, recomputes from the minimal Ψ⁻¹ and
/// throws InternalError if the two results are not isomorphic.
GammaModule xi(const GammaModule& g, bool validate = true);

struct FunctorComparison {
    bool holds = false;
    GammaModule lhs;
    GammaModule rhs;
    IsoResult iso;
    std::string reason;
};

/// Ξ((−, \underline M)) against (\underline{Tr M}, −).
FunctorComparison rho_check(const LambdaModule& m);
/// Ξ((−, \underline Z)) against Tor₁(−, Z) = Ker(−⊗ΩZ -> −⊗P_Z), including
/// value dimensions against the module-level Tor₁.
FunctorComparison tor_compare(const LambdaModule& z);

/// Ψ⁻¹, Cok, Φ, then transport back to a contravariant module along the
/// duality D(J_a) ≅ J_a.
GammaModule auto_equiv(const GammaModule& g);

} // namespace monocat
