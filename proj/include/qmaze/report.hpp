#pragma once

#include <json.hpp>

#include "qmaze/search.hpp"
#include "qmaze/verify.hpp"

namespace qmaze {

nlohmann::json to_json(const IterationRecord& rec);
nlohmann::json to_json(const SearchResult& result);
nlohmann::json to_json(const BenchReport& report);

}  // namespace qmaze
