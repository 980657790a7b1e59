#include "bmseq/tableio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bmseq {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return is;
}

}  // namespace

void write_cache(std::ostream& os, const BMTable& table) {
  os << "BMTABLE v1 max_m=" << table.max_m() << '\n';
  for (unsigned m = 0; m <= table.max_m(); ++m)
    for (unsigned ell = 0; ell <= m; ++ell)
      os << m << ' ' << ell << ' ' << table.n_entry(ell, m).get_str() << '\n';
}

void write_cache_file(const std::string& path, const BMTable& table) {
  auto os = open_out(path);
  write_cache(os, table);
  if (!os) throw std::runtime_error("write failed: " + path);
}

BMTable read_cache(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::runtime_error("cache: empty input");
  const std::string prefix = "BMTABLE v1 max_m=";
  if (header.rfind(prefix, 0) != 0)
    throw std::runtime_error("cache: bad header '" + header + "'");
  unsigned long max_m = 0;
  try {
    std::size_t used = 0;
    max_m = std::stoul(header.substr(prefix.size()), &used);
    if (used != header.size() - prefix.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::runtime_error("cache: bad max_m in header '" + header + "'");
  }

  std::vector<std::vector<Int>> rows(max_m + 1);
  for (unsigned long m = 0; m <= max_m; ++m) rows[m].resize(m + 1);
  std::string line;
  for (unsigned long m = 0; m <= max_m; ++m) {
    for (unsigned long ell = 0; ell <= m; ++ell) {
      if (!std::getline(is, line))
        throw std::runtime_error("cache: truncated, expected entry m=" + std::to_string(m) +
                                 " l=" + std::to_string(ell));
      std::istringstream ls(line);
      unsigned long fm = 0, fl = 0;
      std::string digits;
      if (!(ls >> fm >> fl >> digits) || fm != m || fl != ell)
        throw std::runtime_error("cache: bad or out-of-order line '" + line + "'");
      std::string rest;
      if (ls >> rest) throw std::runtime_error("cache: trailing tokens on line '" + line + "'");
      if (mpz_set_str(rows[m][ell].get_mpz_t(), digits.c_str(), 10) != 0)
        throw std::runtime_error("cache: bad integer '" + digits + "'");
      if (sign(rows[m][ell]) <= 0)
        throw std::runtime_error("cache: nonpositive entry on line '" + line + "'");
    }
  }
  while (std::getline(is, line))
    if (!line.empty()) throw std::runtime_error("cache: trailing garbage '" + line + "'");
  return BMTable::from_rows(std::move(rows));
}

BMTable read_cache_file(const std::string& path) {
  auto is = open_in(path);
  return read_cache(is);
}

void write_csv(std::ostream& os, const BMTable& table) {
  os << "m,l,numerator,denominator\n";
  for (unsigned m = 0; m <= table.max_m(); ++m)
    for (unsigned ell = 0; ell <= m; ++ell) {
      const Rat d = table.d(ell, m);
      os << m << ',' << ell << ',' << d.get_num().get_str() << ',' << d.get_den().get_str()
         << '\n';
    }
}

void write_csv_file(const std::string& path, const BMTable& table) {
  auto os = open_out(path);
  write_csv(os, table);
  if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace bmseq
