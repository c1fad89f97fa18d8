#pragma once

#include <string>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot {

struct CatalogEntry {
    std::string name;
    std::string code;
    std::string notes;
};

// Loads a name<TAB>code<TAB>notes file; blank lines and # comments are
// skipped. Every code must parse and names must be unique.
std::vector<CatalogEntry> load_catalog(const std::string& path);

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries,
                               const std::string& name);

} // namespace vknot
