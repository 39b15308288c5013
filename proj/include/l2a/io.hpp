#pragma once

#include "l2a/comoment.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace l2a::io {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Schema violation; the message starts with the JSON path of the offending field.
struct SchemaError : InputError {
    SchemaError(const std::string& path, const std::string& msg) : InputError(path + ": " + msg), field(path) {}
    std::string field;
};

// Reads and parses a JSON file; parse errors carry line and column.
Json load_file(const fs::path& path);
void save_file(const fs::path& path, const Json& j);

// "2*x1 - x3" over the given labels; "0" for the zero vector.
RVec parse_combination(const std::vector<std::string>& labels, const std::string& text, const std::string& where);

// "algebra" | "morphism" | "action" | "comoment": the "kind" field, or inferred from the keys.
std::string detect_kind(const Json& j);

// A string value is a file reference relative to base_dir; objects are inline.
Lie2Algebra algebra_from_json(const Json& j, const fs::path& base_dir = {}, const std::string& where = "$");
Json algebra_to_json(const Lie2Algebra& L);

Lie2Morphism morphism_from_json(const Json& j, const fs::path& base_dir = {}, const std::string& where = "$");
Json morphism_to_json(const Lie2Morphism& F);

TwoAction action_from_json(const Json& j, const fs::path& base_dir = {}, const std::string& where = "$");
// Reads the rho tables of j onto a zero action of the given algebra.
TwoAction action_tables_from_json(const Json& j, const Lie2Algebra& L, int chart_dim, const std::string& where);
Json action_to_json(const TwoAction& rho, bool inline_algebra = true);

Comomentum comoment_from_json(const Json& j, const fs::path& base_dir = {}, const std::string& where = "$");
Comomentum comoment_tables_from_json(const Json& j, const TwoAction& rho, const PlecticForm& omega,
                                     const std::string& where);
Json comoment_to_json(const Comomentum& lam, bool inline_action = true);

DiscrepancyRecord record_from_json(const Json& j, const std::string& where);
Json record_to_json(const DiscrepancyRecord& r);

Json report_to_json(const Report& r);

}  // namespace l2a::io
