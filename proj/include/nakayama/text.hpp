#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/enumerate.hpp"
#include "nakayama/homology.hpp"

namespace nakayama {

/* grammar: comma-separated positive integers, components separated by '|' in
   tau-order, optional parentheses and whitespace, e.g. "2,2,1|2,3,2,2,1" */
Algebra parse_algebra(const std::string& text);
std::string format_algebra(const Algebra& a);

std::string summary_table(const Algebra& a, const HomologicalSummary& s);
std::string summary_json(const Algebra& a, const HomologicalSummary& s);

/* newline-delimited catalog: a header object carrying tool version and the
   search config, then one record object per line, canonical series ascending */
void write_catalog(std::ostream& out, const SearchConfig& cfg,
                   const std::vector<CatalogRecord>& records);
std::vector<CatalogRecord> read_catalog(std::istream& in);

extern const char* const kToolVersion;

}  // namespace nakayama
