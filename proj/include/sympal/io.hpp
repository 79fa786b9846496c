#pragma once

// JSON documents for fields, matrices, group fixtures, verdicts, weight
// profiles and mackey sweep inputs. Every reader throws Error(Parse).

#include <json.hpp>

#include "sympal/classify.hpp"
#include "sympal/mackey.hpp"
#include "sympal/npgroup.hpp"
#include "sympal/regularity.hpp"

namespace sympal::io {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text);
Json read_file(const std::string& path);

Json to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

/// degree integers in [0, ell), constant term first.
Json element_to_json(const Field& f, Field::Elem x);
Field::Elem element_from_json(const FieldSpec& f, const Json& j);

/// Row-major array of element arrays.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const FieldSpec& f, const Json& j, std::size_t rows, std::size_t cols);

/// Reduced echelon basis rows.
Json to_json(const Subspace& s);
Subspace subspace_from_json(const FieldSpec& f, const Json& j, std::size_t ambient);

/// {"field", "n", "gram": "standard" | matrix, "generators": [matrix...]}.
Json to_json(const MatrixGroup& g);
MatrixGroup group_from_json(const Json& j);

/// {"case": ..., witness fields}.
Json to_json(const Classification& c);
Classification classification_from_json(const FieldSpec& f, std::size_t n, const Json& j);

Json to_json(const WeightProfile& p);
WeightProfile profile_from_json(const Json& j);

Json to_json(const Collision& c);

/// Group fixture fields plus "form", "params", "alpha" and "order_bound".
Json to_json(const NpGroup& g);

/// {"fixture": name} | {"permutations": [[...]]} | {"table": [[...]]}.
GroupPtr finite_group_from_json(const Json& j);
/// {"generators": [[perm]...]} or {"elements": [index...]} inside g.
SubgroupPtr subgroup_from_json(const GroupPtr& g, const Json& j);

Json to_json(const SweepReport& r);
Json to_json(const RestrictionReport& r);
Json to_json(const IdentitySweep& r);

}  // namespace sympal::io
