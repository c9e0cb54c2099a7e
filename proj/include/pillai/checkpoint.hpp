#ifndef PILLAI_CHECKPOINT_HPP
#define PILLAI_CHECKPOINT_HPP

// Checkpoints for sharded searches.
//
// <path> holds one line per completed shard, `k2=<int> done=<count>` where
// count is the number of records the shard produced, followed by a trailer
// `hash=<16 hex digits>` over the records so far. A leading `# ...` line
// names the search so a checkpoint cannot be resumed under other
// parameters. The records themselves live next to it in <path>.records as
// `k2,k3,p,l2,l3` rows. Both files are written to a temporary name and then
// renamed into place.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pillai/errors.hpp"
#include "pillai/search_record.hpp"

namespace pillai::search {

struct CheckpointState {
  std::string signature;  // e.g. "mode=l3zero kmax=1000 pmin=5"
  std::map<FibIndex, std::vector<SearchRecord>> shards;

  std::vector<SearchRecord> sorted_records() const {
    std::vector<SearchRecord> out;
    for (const auto& [k2, recs] : shards) out.insert(out.end(), recs.begin(), recs.end());
    std::sort(out.begin(), out.end(), record_less);
    return out;
  }
};

inline std::filesystem::path records_path(const std::filesystem::path& checkpoint) {
  auto p = checkpoint;
  p += ".records";
  return p;
}

namespace detail {

inline void write_atomically(const std::filesystem::path& target, const std::string& content) {
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IntegrityError("cannot write checkpoint file " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw IntegrityError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace detail

inline void write_checkpoint(const std::filesystem::path& path, const CheckpointState& state) {
  const auto records = state.sorted_records();
  std::ostringstream rec;
  rec << kCsvHeader << "\n";
  for (const auto& r : records) rec << to_csv_row(r) << "\n";
  // Records first: a crash between the two renames leaves a checkpoint
  // that still validates against the subset of records it lists.
  detail::write_atomically(records_path(path), rec.str());

  std::ostringstream ck;
  ck << "# " << state.signature << "\n";
  for (const auto& [k2, recs] : state.shards) ck << "k2=" << k2 << " done=" << recs.size() << "\n";
  ck << "hash=" << detail::hex64(records_hash(records)) << "\n";
  detail::write_atomically(path, ck.str());
}

/// Loads and validates a checkpoint. Throws IntegrityError on any
/// inconsistency (bad syntax, missing trailer, count or hash mismatch,
/// different search signature).
inline CheckpointState read_checkpoint(const std::filesystem::path& path,
                                       const std::string& expected_signature) {
  std::ifstream in(path);
  if (!in) throw IntegrityError("cannot open checkpoint " + path.string());
  CheckpointState state;
  std::map<FibIndex, std::size_t> declared;
  std::string line;
  std::string hash;
  bool saw_signature = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!hash.empty()) throw IntegrityError("content after hash trailer in " + path.string());
    if (line.rfind("# ", 0) == 0) {
      state.signature = line.substr(2);
      saw_signature = true;
    } else if (line.rfind("hash=", 0) == 0) {
      hash = line.substr(5);
    } else {
      unsigned k2 = 0;
      std::size_t done = 0;
      char tail = 0;
      if (std::sscanf(line.c_str(), "k2=%u done=%zu%c", &k2, &done, &tail) != 2) {
        throw IntegrityError("malformed checkpoint line: '" + line + "'");
      }
      if (!declared.emplace(static_cast<FibIndex>(k2), done).second) {
        throw IntegrityError("duplicate shard k2=" + std::to_string(k2));
      }
    }
  }
  if (hash.empty()) throw IntegrityError("checkpoint has no hash trailer (truncated?)");
  if (!saw_signature || state.signature != expected_signature) {
    throw IntegrityError("checkpoint belongs to a different search: '" + state.signature + "'");
  }

  std::ifstream rin(records_path(path));
  if (!rin) throw IntegrityError("missing records file " + records_path(path).string());
  std::getline(rin, line);
  if (line != kCsvHeader) throw IntegrityError("records file has wrong header");
  for (const auto& [k2, n] : declared) state.shards[k2];
  while (std::getline(rin, line)) {
    if (line.empty()) continue;
    SearchRecord r;
    try {
      r = parse_csv_row(line);
    } catch (const std::exception& e) {
      throw IntegrityError(e.what());
    }
    // Records of shards not listed belong to a write that never completed.
    auto it = state.shards.find(r.k2);
    if (it != state.shards.end()) it->second.push_back(r);
  }
  for (const auto& [k2, n] : declared) {
    if (state.shards[k2].size() != n) {
      throw IntegrityError("shard k2=" + std::to_string(k2) + " declares " + std::to_string(n) +
                           " records, found " + std::to_string(state.shards[k2].size()));
    }
  }
  if (detail::hex64(records_hash(state.sorted_records())) != hash) {
    throw IntegrityError("checkpoint hash mismatch");
  }
  return state;
}

}  // namespace pillai::search

#endif  // PILLAI_CHECKPOINT_HPP
