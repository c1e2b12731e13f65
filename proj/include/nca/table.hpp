#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "nca/corpus.hpp"
#include "nca/matcher.hpp"

namespace nca {

/// One (W_N1, CL_N2, Freq) record. A missing noun class means the noun had
/// no semantic class; it is written as "0" and never contributes to class
/// representatives.
struct NCAEntry {
  std::string noun;
  std::optional<SemClassCode> noun_class;
  std::string classifier;
  ClassifierType cltype = ClassifierType::Unit;
  std::uint64_t freq = 0;

  bool operator==(const NCAEntry&) const = default;
};

/// Noun/classifier co-occurrence counts keyed by
/// (noun, noun class, classifier, classifier type).
class NCATable {
 public:
  using Key = std::tuple<std::string, std::string, std::string, int>;

  NCATable() = default;

  /// Adds `count` to the entry for the key, creating it if needed.
  void add(const std::string& noun,
           const std::optional<SemClassCode>& noun_class,
           const std::string& classifier, ClassifierType cltype,
           std::uint64_t count = 1);

  void merge(const NCATable& other);

  /// Copy with every frequency multiplied by `factor` (> 0).
  NCATable scaled(std::uint64_t factor) const;

  /// Entries in key order (noun, class, classifier, type).
  std::vector<NCAEntry> entries() const;
  std::size_t size() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }
  std::uint64_t total_freq() const noexcept { return total_; }

  /// Entries for one noun, any class or type.
  std::vector<NCAEntry> entries_for_noun(std::string_view noun) const;
  /// Entries whose class is exactly `noun_class`.
  std::vector<NCAEntry> entries_for_class(const SemClassCode& noun_class) const;
  /// Distinct noun classes present, excluding the unclassified bucket.
  std::vector<SemClassCode> classes() const;

  bool operator==(const NCATable& other) const {
    return counts_ == other.counts_;
  }

 private:
  static NCAEntry to_entry(const Key& key, std::uint64_t freq);

  std::map<Key, std::uint64_t> counts_;
  // Secondary indexes: noun -> keys, class code -> keys.
  std::map<std::string, std::set<Key>, std::less<>> by_noun_;
  std::map<std::string, std::set<Key>, std::less<>> by_class_;
  std::uint64_t total_ = 0;
};

/// Counts each event once under its (noun, class, classifier, type) key.
/// Events whose classifier has no type are skipped.
NCATable aggregate(std::span<const AssociationEvent> events);

/// Most frequent classifier of the given type for (noun, noun_class); ties
/// go to the bytewise smallest classifier.
std::optional<std::string> representative_for_noun(
    const NCATable& table, std::string_view noun,
    const SemClassCode& noun_class, ClassifierType cltype);

/// Most frequent classifier of the given type summed over all nouns of
/// exactly `noun_class` (descendant classes are not included).
std::optional<std::string> representative_for_class(
    const NCATable& table, const SemClassCode& noun_class,
    ClassifierType cltype);

/// noun<TAB>noun_class<TAB>classifier<TAB>cltype<TAB>freq, in key order.
void save_table(const NCATable& table, std::ostream& out);

/// Reads the save_table format. Blank lines and '#' comments are skipped.
/// Throws MalformedTableLine or DuplicateKey.
NCATable load_table(std::istream& in);
NCATable load_table_file(const std::string& path);

}  // namespace nca
