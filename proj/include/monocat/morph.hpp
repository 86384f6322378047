#pragma once

// The morphism category H of Λ-mod with its full subcategories S (monos) and
// F (epis), the Cok/Ker equivalences between S and F, and membership tests for
// the ideals V, U, X, Y through explicit right approximations.

#include <optional>
#include <string>

#include "monocat/lambda.hpp"

namespace monocat {

enum class Kind { H, S, F };

const char* kind_name(Kind k);
Kind parse_kind(const std::string& s);

class MorphObject {
public:
    MorphObject() = default;
    /// Throws MonoViolation / EpiViolation if f does not have the requested kind.
    MorphObject(LambdaMorphism f, Kind kind);

    const LambdaMorphism& map() const { return f_; }
    const LambdaModule& src() const { return f_.src(); }
    const LambdaModule& dst() const { return f_.dst(); }
    Kind kind() const { return kind_; }
    const RingCtx& ctx() const { return f_.src().ctx(); }

private:
    LambdaMorphism f_;
    Kind kind_ = Kind::H;
};

inline MorphObject make(const LambdaMorphism& f, Kind kind) { return MorphObject(f, kind); }

/// A commuting square sigma2 ∘ f_src = f_dst ∘ sigma1.
class MorphMap {
public:
    MorphMap() = default;
    MorphMap(MorphObject src, MorphObject dst, LambdaMorphism sigma1, LambdaMorphism sigma2);

    const MorphObject& src() const { return src_; }
    const MorphObject& dst() const { return dst_; }
    const LambdaMorphism& sigma1() const { return s1_; }
    const LambdaMorphism& sigma2() const { return s2_; }

    static MorphMap identity(const MorphObject& o);
    static MorphMap zero(const MorphObject& a, const MorphObject& b);

private:
    MorphObject src_;
    MorphObject dst_;
    LambdaMorphism s1_;
    LambdaMorphism s2_;
};

MorphMap compose(const MorphMap& g, const MorphMap& f);
MorphMap add(const MorphMap& f, const MorphMap& g);
MorphMap scale(const MorphMap& f, std::uint32_t c);
bool is_zero(const MorphMap& f);

/// Kind S if both are S, F if both are F, H otherwise.
MorphObject direct_sum(const MorphObject& a, const MorphObject& b);

/// (A ↪ B) ↦ (B ↠ Cok f).
MorphObject cok(const MorphObject& o);
/// (B ↠ C) ↦ (Ker g ↪ B).
MorphObject ker(const MorphObject& o);
/// The map induced by a square on cokernels / kernels.
MorphMap cok(const MorphMap& h);
MorphMap ker(const MorphMap& h);

/// The comparison s -> ker(cok(s)) given by (corestriction of s, 1).
MorphMap ker_cok_comparison(const MorphObject& s);
/// The comparison cok(ker(g)) -> g given by (1, map induced by g).
MorphMap cok_ker_comparison(const MorphObject& g);
/// Whether both components of the square are invertible.
bool is_iso(const MorphMap& h);

/// Basis of Hom_H(o1, o2).
std::vector<MorphMap> hom_h(const MorphObject& o1, const MorphObject& o2);
/// Coordinates of h in the given basis of Hom_H.
FpVector hom_h_coordinates(const std::vector<MorphMap>& basis, const MorphMap& h);

enum class Ideal { V, U, X, Y };

const char* ideal_name(Ideal i);
Ideal parse_ideal(const std::string& s);

struct Approximation {
    MorphObject object;
    MorphMap map; // object -> target
};

/// V, X on S-objects; U, Y on F-objects.
///   V: (A = A) ⊕ (0 → B)                 app = (1, [f 1])
///   U: (B = B) ⊕ (Ker g → 0)             app = ([1 inc], g)
///   X: (A = A) ⊕ (A ×_B P_B ↪ P_B)       app = ([1 pr_A], [f π])
///   Y: (A = A) ⊕ (P_A ↠ B)               app = ([1 π], [g 1])
Approximation right_approximation(Ideal ideal, const MorphObject& target);

/// Some k with app ∘ k = h, or nullopt if h does not factor through the ideal.
std::optional<MorphMap> factors_through(Ideal ideal, const MorphMap& h);

/// The subspace of Hom_H(o1, o2) (in hom_h coordinates) of maps factoring
/// through the ideal.
Subspace factoring_subspace(Ideal ideal, const MorphObject& o1, const MorphObject& o2,
                            const std::vector<MorphMap>& basis);

/// Whether the object itself lies in the additive closure of the ideal.
bool in_ideal(Ideal ideal, const MorphObject& o);

} // namespace monocat
