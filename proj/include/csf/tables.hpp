// Shipped reference tables and their on-disk format.
//
//   table2.tsv: "s<TAB>n" per line, the linking words covering expansion
//               lengths 54..107.
//   table3.tsv: "n<TAB>U" per line, S-word encodings of short level
//               circular square-free words for n = 4..90 outside the
//               impossible lengths.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "csf/link.hpp"

namespace csf {

struct Tables {
    std::vector<Table2Row> table2;
    std::map<std::size_t, std::string> table3;  // n -> U
};

// Directory that holds table2.tsv and table3.tsv.  Prefers "data" under
// the current directory, then the build-time source location.
std::string default_data_dir();

// Missing files load as empty tables (consumers fall back to searching);
// malformed lines are a DomainError.
Tables load_tables(const std::string& data_dir);

// Loaded once from default_data_dir().
const Tables& default_tables();

}  // namespace csf
