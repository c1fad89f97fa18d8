#include "vknot/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "vknot/errors.hpp"

namespace vknot {

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog " + path);
    std::vector<CatalogEntry> entries;
    std::set<std::string> seen;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto t1 = line.find('\t');
        if (t1 == std::string::npos)
            throw ParseError(path + ":" + std::to_string(no) +
                             ": expected name<TAB>code<TAB>notes");
        const auto t2 = line.find('\t', t1 + 1);
        CatalogEntry entry;
        entry.name = line.substr(0, t1);
        entry.code = line.substr(t1 + 1, t2 == std::string::npos
                                             ? std::string::npos
                                             : t2 - t1 - 1);
        if (t2 != std::string::npos) entry.notes = line.substr(t2 + 1);
        if (!seen.insert(entry.name).second)
            throw ParseError(path + ":" + std::to_string(no) +
                             ": duplicate name " + entry.name);
        try {
            parse_gauss_code(entry.code);
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(no) + " (" +
                             entry.name + "): " + e.what());
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries,
                               const std::string& name) {
    for (const CatalogEntry& entry : entries)
        if (entry.name == name) return &entry;
    return nullptr;
}

} // namespace vknot
