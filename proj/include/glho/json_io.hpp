#pragma once

#include <json.hpp>

#include "glho/homotopy.hpp"
#include "glho/interval.hpp"
#include "glho/kseries.hpp"
#include "glho/partition.hpp"
#include "glho/weight.hpp"

namespace glho {

using json = nlohmann::json;

// Schemas (documented in the README):
//   Weight       {"m": int, "n": int, "rows": [int]}
//   BlockKey     {"core": [int], "base": int}
//   BlockObject  [{"kind": "R"|"B"|"P"|"L", "a": int, "b": int}] with one
//                record per summand copy; P and L use a == b
//   HoObject     [{"kind": "S"|"EvenR", "a": int, "b": int}]
//   HoMorphism   [{"i": int, "j": int, "coeff": int,
//                  "src_slot": int, "dst_slot": int}]
//   KSeries      {"variant": "kac_plus"|"kac_minus"|"simple",
//                 "terms": [{"deg": int, "label": int, "coeff": int}],
//                 "truncation": int, "d_max": int}
//   Partition    [int]

json to_json(const Weight& w);
Weight weight_from_json(const json& j);

json to_json(const BlockKey& key);
BlockKey block_key_from_json(const json& j);

json to_json(const BlockObject& x);
BlockObject block_object_from_json(const json& j);

json to_json(const HoObject& x);
HoObject ho_object_from_json(const json& j);

json to_json(const HoMorphism& f);
HoMorphism ho_morphism_from_json(const json& j);

json to_json(const KSeries& s);
KSeries kseries_from_json(const json& j);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

}  // namespace glho
