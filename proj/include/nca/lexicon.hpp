#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nca/corpus.hpp"

namespace nca {

struct LexEntry {
  std::string surface;
  PosTag pos;
  std::optional<SemClassCode> sem;
  std::uint64_t freq = 0;  // unigram frequency, used to pick the default tag
  std::optional<ClassifierType> cltype;

  bool operator==(const LexEntry&) const = default;
};

/// Surface-indexed word list. Immutable once built.
///
/// Entries for one surface are kept in lookup order: descending freq, then
/// POS label, then semantic class code (absent first).
class Lexicon {
 public:
  Lexicon() = default;

  /// Builds a lexicon from entries. Throws DuplicateEntry on a repeated
  /// (surface, pos, sem) triple and MalformedLexLine on an entry that breaks
  /// the CL/cltype pairing; the reported line is the entry's 1-based index.
  static Lexicon from_entries(std::vector<LexEntry> entries);

  /// Entries for `surface` in lookup order; empty when absent.
  std::span<const LexEntry> lookup(std::string_view surface) const;

  bool contains(std::string_view surface) const;

  /// True iff some surface begins with `prefix` (always true for "" when
  /// the lexicon is non-empty).
  bool is_known_prefix(std::string_view prefix) const;

  bool empty() const noexcept { return by_surface_.empty(); }
  std::size_t size() const noexcept { return count_; }
  /// Longest surface, in bytes.
  std::size_t max_surface_bytes() const noexcept { return max_bytes_; }

 private:
  void add(LexEntry entry, std::size_t line_no);
  void finish();

  std::map<std::string, std::vector<LexEntry>, std::less<>> by_surface_;
  std::size_t count_ = 0;
  std::size_t max_bytes_ = 0;

  friend Lexicon load_lexicon(std::istream& in);
};

/// Reads surface<TAB>pos<TAB>sem<TAB>freq<TAB>cltype lines. Blank lines and
/// lines starting with '#' are skipped. Throws MalformedLexLine or
/// DuplicateEntry.
Lexicon load_lexicon(std::istream& in);

Lexicon load_lexicon_file(const std::string& path);

}  // namespace nca
