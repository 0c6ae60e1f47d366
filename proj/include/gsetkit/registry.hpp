#ifndef GSETKIT_REGISTRY_HPP
#define GSETKIT_REGISTRY_HPP

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsetkit/error.hpp"
#include "gsetkit/instance.hpp"
#include "gsetkit/kv.hpp"

namespace gsetkit {

struct HistoricCut {
  std::string label;
  Weight cut = 0;
};

struct RegistryEntry {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  Weight best_known_cut = 0;
  std::vector<HistoricCut> historic_cuts;
  std::optional<std::string> checksum;
  // Published reference time-to-target (seconds) for the 99.9% target.
  std::optional<double> reference_ttt_999_s;

  void validate() const {
    if (name.empty()) throw Error(ErrorCode::config, "registry entry without a name");
    if (best_known_cut <= 0) throw Error(ErrorCode::config, name + ": best_known must be positive");
    for (const auto& h : historic_cuts) {
      if (h.cut > best_known_cut) {
        throw Error(ErrorCode::config, name + ": historic cut " + std::to_string(h.cut) + " (" + h.label +
                                           ") exceeds best known " + std::to_string(best_known_cut));
      }
    }
  }

  // Line format: name=G81 n=20000 m=40000 best_known=14060
  //   [checksum=<hex>] [reference_ttt_999_s=<s>] [historic="label:cut;label:cut"]
  kv::Record to_record() const {
    kv::Record rec;
    rec.add("name", name).add("n", n).add("m", m).add("best_known", best_known_cut);
    if (checksum) rec.add("checksum", *checksum);
    if (reference_ttt_999_s) rec.add("reference_ttt_999_s", *reference_ttt_999_s);
    if (!historic_cuts.empty()) {
      std::string joined;
      for (const auto& h : historic_cuts) {
        if (!joined.empty()) joined += ';';
        joined += h.label + ":" + std::to_string(h.cut);
      }
      rec.add("historic", joined);
    }
    return rec;
  }

  static RegistryEntry from_record(const kv::Record& rec) {
    RegistryEntry e;
    e.name = std::string(rec.get("name"));
    e.n = kv::to_int<std::size_t>(rec.get("n"), "n");
    e.m = kv::to_int<std::size_t>(rec.get("m"), "m");
    e.best_known_cut = kv::to_int<Weight>(rec.get("best_known"), "best_known");
    if (auto v = rec.find("checksum")) e.checksum = std::string(*v);
    if (auto v = rec.find("reference_ttt_999_s")) e.reference_ttt_999_s = kv::to_double(*v, "reference_ttt_999_s");
    if (auto v = rec.find("historic")) {
      std::string_view rest = *v;
      while (!rest.empty()) {
        const auto semi = rest.find(';');
        std::string_view item = rest.substr(0, semi);
        rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
        const auto colon = item.rfind(':');
        if (colon == std::string_view::npos) throw Error(ErrorCode::config, "historic item needs label:cut");
        e.historic_cuts.push_back({std::string(item.substr(0, colon)),
                                   kv::to_int<Weight>(item.substr(colon + 1), "historic cut")});
      }
    }
    e.validate();
    return e;
  }
};

class Registry {
 public:
  static Registry embedded() {
    Registry r;
    r.put({"G72", 10000, 20000, 7008, {}, std::nullopt, std::nullopt});
    r.put({"G77", 14000, 28000, 9940, {}, std::nullopt, 25800.0});
    r.put({"G81",
           20000,
           40000,
           14060,
           {{"Cosm 2025", 14060},
            {"GESPR 2017", 14056},
            {"GESPR 2015", 14048},
            {"PF-ESL 2022", 14038},
            {"MOH 2017", 14036},
            {"Breakout Local Search 2013", 14030},
            {"Toshiba SBM 2021", 13992},
            {"Rank-two relaxation 2002", 13662},
            {"SDP/dual scaling 2000", 13448}},
           std::nullopt,
           276000.0});
    return r;
  }

  // Embedded rows, then the file named by GSETKIT_REGISTRY (if set) on top.
  static Registry load_default() {
    Registry r = embedded();
    if (const char* path = std::getenv("GSETKIT_REGISTRY"); path != nullptr && *path != '\0') {
      r.merge_file(path);
    }
    return r;
  }

  void put(RegistryEntry entry) {
    entry.validate();
    auto name = entry.name;
    entries_[std::move(name)] = std::move(entry);
  }

  // One record per line; blank lines and '#' comments are skipped. Entries
  // replace same-named ones.
  void merge_text(std::string_view text) {
    std::size_t pos = 0, line_no = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string_view::npos || line[first] == '#') continue;
      try {
        put(RegistryEntry::from_record(kv::parse(line)));
      } catch (const Error& e) {
        throw Error(ErrorCode::config, "registry line " + std::to_string(line_no) + ": " + e.what());
      }
    }
  }

  void merge_file(const std::filesystem::path& path) { merge_text(read_text_file(path)); }

  const RegistryEntry* find(std::string_view name) const {
    auto it = entries_.find(std::string(name));
    return it == entries_.end() ? nullptr : &it->second;
  }

  const std::map<std::string, RegistryEntry>& entries() const { return entries_; }

  std::string to_text() const {
    std::string out;
    for (const auto& [_, e] : entries_) out += e.to_record().str() + "\n";
    return out;
  }

 private:
  std::map<std::string, RegistryEntry> entries_;
};

}  // namespace gsetkit

#endif  // GSETKIT_REGISTRY_HPP
