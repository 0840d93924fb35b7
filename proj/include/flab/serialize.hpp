#pragma once

#include <json.hpp>

#include "flab/abelian.hpp"
#include "flab/brown.hpp"
#include "flab/covers.hpp"
#include "flab/folding.hpp"
#include "flab/fox.hpp"
#include "flab/pipeline.hpp"
#include "flab/presentation.hpp"

namespace flab {

// Insertion-ordered so that reports are byte-for-byte reproducible.
using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const Presentation& pres);
[[nodiscard]] Json to_json(const AbelianStructure& ab);
[[nodiscard]] Json to_json(const AlexanderData& data);
[[nodiscard]] Json to_json(const Rank1Result& res);
[[nodiscard]] Json to_json(const ConeReport& rep);
// {index, action: {gen: [image of each coset]}, subgroup_gens}
[[nodiscard]] Json to_json(const CosetTable& table, const Alphabet& alphabet);
[[nodiscard]] Json to_json(const SubgroupPresentation& sub);
[[nodiscard]] Json to_json(const AscendingResult& res, const Alphabet& fiber_alphabet);
// Certificate words are written over the input's generators (cover words
// over the cover's).
[[nodiscard]] Json to_json(const FibredVerdict& verdict, const Presentation& pres);
[[nodiscard]] Json to_json(const CorankReport& rep);

}  // namespace flab
