#pragma once

#include "gbsknot/classifier.hpp"

#include <json.hpp>

#include <string>

namespace gbsknot {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal
/// strings, so nothing is lost.
Json to_json(const Integer& value);

Json to_json(const Shape& shape);
Json to_json(const AbelianStructure& ab);
Json to_json(const ModularImage& image);
Json to_json(const Presentation& p);
Json to_json(const OneKnotVerdict& v);
Json to_json(const NKnotVerdict& v);
Json to_json(const Witness& w);

/// Full classification report. Keys always appear in the same order and
/// `input` is echoed verbatim.
Json report(const std::string& input, const KnotVerdict& verdict);

}  // namespace gbsknot
