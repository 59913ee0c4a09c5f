#include "csf/tables.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "csf/words.hpp"

#ifndef CSF_DATA_DIR
#define CSF_DATA_DIR "data"
#endif

namespace csf {

namespace {

namespace fs = std::filesystem;

std::size_t parse_length(const std::string& text, const std::string& line) {
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(text, &pos);
    } catch (const std::exception&) {
        throw DomainError("bad length field in table row: " + line);
    }
    if (pos != text.size()) throw DomainError("bad length field in table row: " + line);
    return static_cast<std::size_t>(value);
}

// rows of a two-column tab-separated file; absent files yield no rows
std::vector<std::pair<std::string, std::string>> read_tsv(const fs::path& path) {
    std::vector<std::pair<std::string, std::string>> rows;
    std::ifstream in(path);
    if (!in) return rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw DomainError("expected two tab-separated columns: " + line);
        }
        rows.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    return rows;
}

}  // namespace

std::string default_data_dir() {
    if (fs::exists(fs::path("data") / "table2.tsv")) return "data";
    return CSF_DATA_DIR;
}

Tables load_tables(const std::string& data_dir) {
    Tables t;
    for (const auto& [s, n] : read_tsv(fs::path(data_dir) / "table2.tsv")) {
        require_sword(s);
        t.table2.push_back(Table2Row{s, parse_length(n, s + "\t" + n)});
    }
    for (const auto& [n, u] : read_tsv(fs::path(data_dir) / "table3.tsv")) {
        require_sword(u);
        t.table3.emplace(parse_length(n, n + "\t" + u), u);
    }
    return t;
}

const Tables& default_tables() {
    static const Tables t = load_tables(default_data_dir());
    return t;
}

}  // namespace csf
