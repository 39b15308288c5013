#pragma once

#include "l2a/basic.hpp"
#include "l2a/io.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace l2a {

struct CatalogAlgebra {
    std::string key;
    Lie2Algebra algebra;
    std::string expected_s;
    std::optional<BasicParams> basic;  // set for generated algebras
};

struct CatalogMutation {
    std::string algebra_key;
    std::string bracket;  // "l1", "l2" or "l3"
    std::string entry;    // key inside that bracket table
    std::string value;
    Lie2Algebra mutated;
};

struct CatalogAction {
    std::string name;
    std::string algebra_key;
    TwoAction action;
    std::string expected_t;
    bool in_table = true;
    std::vector<std::string> failing;  // expected failing conditions; empty means the action verifies
    std::optional<PlecticForm> omega;
    std::string expected_plectic;  // empty when not checked
    bool expect_obstruction = false;
    std::optional<std::string> pushforward_witness;  // label in g_-1, or "" for success
};

struct CatalogComoment {
    std::string name;
    std::string action;
    Comomentum source;
    std::vector<DiscrepancyRecord> records;
    std::vector<std::string> failing;  // expected failures after the records are applied
};

struct CatalogEntry {
    std::string id;
    std::string title;
    std::vector<CatalogAlgebra> algebras;
    std::vector<CatalogMutation> mutations;
    std::vector<CatalogAction> actions;
    std::vector<CatalogComoment> comomenta;

    const CatalogAlgebra& algebra(const std::string& key) const;
    const CatalogAction& action(const std::string& name) const;
};

// S-column -> T-row -> entries such as "Ex.2a".
using SituationTable = std::map<std::string, std::map<std::string, std::vector<std::string>>>;

io::fs::path default_data_dir();
std::vector<std::string> catalog_ids(const io::fs::path& data_dir);
CatalogEntry load_catalog_entry(const io::fs::path& data_dir, const std::string& id);
SituationTable load_table(const io::fs::path& data_dir);

// "Ex.2" lists every id starting with 2, "Ex.2a" lists only 2a.
bool table_lists(const SituationTable& table, const std::string& s, const std::string& t, const std::string& id);

// Every (S, T) cell exercised by the entry's tabled actions.
std::vector<std::pair<std::string, std::string>> exercised_cells(const CatalogEntry& e);

// Replays algebra, mutation, action, plectic, lift and comomentum checks plus table lookups.
Report replay(const CatalogEntry& e, const SituationTable& table);

}  // namespace l2a
