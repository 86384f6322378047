#pragma once

// JSON formats consumed and produced by the command-line tool.
//
//   module     {"p":5,"n":4,"dim":3,"x":[[...]]} or {"p":5,"n":4,"blocks":[2,1]}
//   morphism   {"src":module,"dst":module,"f":[[...]]}
//   object     {"module_src":module,"module_dst":module,"f":[[...]],"kind":"S"}
//   square     {"src":object,"dst":object,"sigma1":[[...]],"sigma2":[[...]]}
//   functor    {"kind":"contra","pres":morphism} or {"kind":"co","copres":morphism}
//   Γ-module   {"variance":"contra","p":5,"n":4,"dims":[...],"actions":[[[...]],...]}
//
// Readers throw InvalidArgument on schema violations; the library
// constructors raise their own errors on mathematically invalid data.

#include <variant>

#include "json.hpp"

#include "monocat/funcat.hpp"
#include "monocat/morph.hpp"

namespace monocat::io {

using nlohmann::json;

json matrix_to_json(const FpMatrix& m);
FpMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, std::uint32_t p, const char* what);

RingCtx ctx_from_json(const json& j);

json module_to_json(const LambdaModule& m);
LambdaModule module_from_json(const json& j);

json morphism_to_json(const LambdaMorphism& f);
LambdaMorphism morphism_from_json(const json& j);

json object_to_json(const MorphObject& o);
MorphObject object_from_json(const json& j);

json square_to_json(const MorphMap& h);
MorphMap square_from_json(const json& j);

using Functor = std::variant<ContraFunctor, CoFunctor>;
json functor_to_json(const Functor& f);
Functor functor_from_json(const json& j);

json gamma_to_json(const GammaModule& g);
GammaModule gamma_from_json(const json& j);

json jordan_type_to_json(const JordanType& t);

} // namespace monocat::io
