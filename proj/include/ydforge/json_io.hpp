#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "ydforge/examples.hpp"
#include "ydforge/grouplike.hpp"
#include "ydforge/ydalgebra.hpp"

// Stable JSON encodings. Scalars are arrays of four "num/den" strings in
// lowest terms; matrices are row-major nested arrays; action and coaction
// families are keyed by the comma-separated exponent tuple of the group
// element. Emission uses ordered maps so identical inputs produce identical
// bytes.
namespace ydforge {

using OrderedJson = nlohmann::ordered_json;

OrderedJson scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const OrderedJson& j);

OrderedJson vec_to_json(const Vec& v);
Vec vec_from_json(const OrderedJson& j);

OrderedJson matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const OrderedJson& j);

OrderedJson group_to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const OrderedJson& j);

OrderedJson element_to_json(const GroupElement& e);
GroupElement element_from_json(const OrderedJson& j);

OrderedJson character_to_json(const Character& chi);
Character character_from_json(const FinAbGroup& g, const OrderedJson& j);

OrderedJson bicharacter_to_json(const Bicharacter& theta);
Bicharacter bicharacter_from_json(const OrderedJson& j);

OrderedJson algebra_to_json(const YDAlgebra& a);
YDAlgebra algebra_from_json(const OrderedJson& j);

OrderedJson axiom_report_to_json(const AxiomReport& r);

OrderedJson core_report_to_json(const YDAlgebra& a, const GroupLikeSet& basis,
                                const CoreReport& r);
OrderedJson scan_report_to_json(const YDAlgebra& a, const GroupLikeSet& basis,
                                const ScanReport& r);

// The `build` document: algebra plus group-like basis and bicharacter.
OrderedJson build_document(const BuiltExample& built);

OrderedJson tables_to_json(const BuiltExample& built, const GrouplikeTables& tables);

}  // namespace ydforge
