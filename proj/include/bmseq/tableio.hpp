#pragma once

#include <iosfwd>
#include <string>

#include "bmseq/table.hpp"

namespace bmseq {

// BMTABLE v1 cache: header "BMTABLE v1 max_m=<M>", then one line "m l N"
// per entry with N in decimal, sorted by (m, l). N is integral, so no
// rational serialization is needed.
void write_cache(std::ostream& os, const BMTable& table);
void write_cache_file(const std::string& path, const BMTable& table);

// Strict reader: rejects bad headers, out-of-order entries, and trailing
// garbage with std::runtime_error naming the offending line.
BMTable read_cache(std::istream& is);
BMTable read_cache_file(const std::string& path);

// CSV with header "m,l,numerator,denominator": the reduced d_l(m) values.
void write_csv(std::ostream& os, const BMTable& table);
void write_csv_file(const std::string& path, const BMTable& table);

}  // namespace bmseq
