#ifndef PILLAI_SEARCH_RECORD_HPP
#define PILLAI_SEARCH_RECORD_HPP

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "pillai/nat.hpp"

namespace pillai::search {

/// A solution of F_k2 - F_k3 = p^l2 - p^l3 with 2 <= k3 < k2, 0 <= l3 < l2.
struct SearchRecord {
  FibIndex k2 = 0;
  FibIndex k3 = 0;
  Nat p;
  unsigned long l2 = 0;
  unsigned long l3 = 0;

  friend bool operator==(const SearchRecord& a, const SearchRecord& b) {
    return a.k2 == b.k2 && a.k3 == b.k3 && a.p == b.p && a.l2 == b.l2 && a.l3 == b.l3;
  }
};

/// Report order: lexicographic by (k2, k3, l2); p and l3 break any
/// remaining ties.
inline bool record_less(const SearchRecord& a, const SearchRecord& b) {
  if (std::tie(a.k2, a.k3, a.l2) != std::tie(b.k2, b.k3, b.l2)) {
    return std::tie(a.k2, a.k3, a.l2) < std::tie(b.k2, b.k3, b.l2);
  }
  if (a.p != b.p) return a.p < b.p;
  return a.l3 < b.l3;
}

inline constexpr const char* kCsvHeader = "k2,k3,p,l2,l3";

inline std::string to_csv_row(const SearchRecord& r) {
  return std::to_string(r.k2) + "," + std::to_string(r.k3) + "," + to_decimal(r.p) + "," +
         std::to_string(r.l2) + "," + std::to_string(r.l3);
}

/// Parses one `k2,k3,p,l2,l3` row.
inline SearchRecord parse_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  if (fields.size() != 5) throw DomainError("malformed record row: '" + line + "'");
  SearchRecord r;
  r.k2 = static_cast<FibIndex>(std::stoul(fields[0]));
  r.k3 = static_cast<FibIndex>(std::stoul(fields[1]));
  r.p = parse_decimal(fields[2]);
  r.l2 = std::stoul(fields[3]);
  r.l3 = std::stoul(fields[4]);
  return r;
}

/// FNV-1a over the canonical CSV rows of the (sorted) records.
inline std::uint64_t records_hash(const std::vector<SearchRecord>& sorted_records) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& r : sorted_records) mix(to_csv_row(r) + "\n");
  return h;
}

}  // namespace pillai::search

#endif  // PILLAI_SEARCH_RECORD_HPP
