#pragma once

// Classifier collocation patterns over concordance fragments.
//
// Seven patterns, written with A- -B for a possibly separated pair and A-B
// for an adjacent one:
//
//   Enumeration   N- -NCNM-CL
//   Ordinal       N- -CL-tii-NCNM
//   Referential   N- -CL-DET
//   IndefDemo     N- -DET-CL
//   Attributive   N- -CL-VATT
//   NounModifier  CL-N
//   Pronoun       N- -CL-{linker | REL_M | ITR_M | DONM | DDAC}
//
// The adjacent part is matched first. The noun of a separated pair is then
// found by searching left from the first token of the adjacent part (B):
//   1. nearest noun left of B is A1;
//   2. nearest relative pronoun within rel_span tokens left of B is p1; if
//      there is none the answer is A1;
//   3. nearest noun left of p1 is A2; the answer is A2 when it lies farther
//      from B than A1, otherwise A1.

#include <bitset>
#include <cstddef>
#include <functional>
#include <istream>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nca/concordancer.hpp"
#include "nca/corpus.hpp"
#include "nca/errors.hpp"

namespace nca {

enum class PatternId {
  Enumeration,
  Ordinal,
  Referential,
  IndefDemo,
  Attributive,
  NounModifier,
  Pronoun,
};

inline constexpr std::size_t kPatternCount = 7;
inline constexpr PatternId kAllPatterns[kPatternCount] = {
    PatternId::Enumeration, PatternId::Ordinal,     PatternId::Referential,
    PatternId::IndefDemo,   PatternId::Attributive, PatternId::NounModifier,
    PatternId::Pronoun,
};

/// Short name used on the command line and in event files: enum, ord, ref,
/// indef, attr, mod, pron.
const char* pattern_name(PatternId id);
std::optional<PatternId> parse_pattern_name(std::string_view name);

class PatternSet {
 public:
  static PatternSet all() {
    PatternSet s;
    s.bits_.set();
    return s;
  }
  static PatternSet none() { return {}; }

  PatternSet& add(PatternId id) {
    bits_.set(static_cast<std::size_t>(id));
    return *this;
  }
  PatternSet& remove(PatternId id) {
    bits_.reset(static_cast<std::size_t>(id));
    return *this;
  }
  bool contains(PatternId id) const {
    return bits_.test(static_cast<std::size_t>(id));
  }

  /// Parses a comma-separated list of short names. Throws
  /// std::invalid_argument on an unknown name.
  static PatternSet parse(std::string_view list);

 private:
  std::bitset<kPatternCount> bits_;
};

struct GapSearchConfig {
  /// How many tokens left of B are searched for a relative pronoun. Zero
  /// switches rule 2 off, leaving only the nearest-noun rule.
  std::size_t rel_span = 5;
};

struct MatchConfig {
  /// Linker words of the Pronoun pattern.
  std::set<std::string, std::less<>> linkers = {"tii", "sung", "nai"};
  /// Marker between the classifier and the number in an ordinal.
  std::string ordinal_marker = "tii";
  GapSearchConfig gaps;
  /// Tags that count as nouns when searching for A.
  std::vector<PosTag> noun_tags = {PosTag::Kind::NCMN, PosTag::other("N")};
  /// Accept a verb in the A slot of Enumeration (the N/V-NCNM-CL reading).
  bool include_verbs = false;
  PatternSet patterns = PatternSet::all();
  WindowConfig window;

  /// Throws std::invalid_argument on an empty linker set or bad window.
  void validate() const;
  bool is_noun(const PosTag& pos) const;
};

struct AssociationEvent {
  TaggedToken noun;
  TaggedToken classifier;
  PatternId pattern = PatternId::Enumeration;
  Origin origin;

  bool operator==(const AssociationEvent&) const = default;
};

/// Gap resolution rules 1-3, searching left from `b_index`. Returns a
/// position strictly left of `b_index` whose tag satisfies `is_noun`, or
/// nullopt.
std::optional<std::size_t> resolve_gap(
    std::span<const TaggedToken> tokens, std::size_t b_index,
    const std::function<bool(const TaggedToken&)>& is_noun,
    const GapSearchConfig& gaps,
    const std::set<std::string, std::less<>>& linkers);

/// Tests each enabled pattern against the fragment's anchor and emits at
/// most one event per pattern. Anchors without a classifier type produce
/// nothing.
std::vector<AssociationEvent> match_fragment(const Fragment& fragment,
                                             const MatchConfig& config);

/// Fragments of one parsed line, matched in anchor order.
std::vector<AssociationEvent> match_line(std::span<const TaggedToken> line,
                                         std::size_t line_no,
                                         const MatchConfig& config);

/// Called for each malformed corpus line; return false to stop reading.
using DataErrorHandler = std::function<bool(const DataError&)>;

/// Reads a tagged corpus and returns all events in corpus order. Throws the
/// first MalformedToken.
std::vector<AssociationEvent> extract_events(std::istream& corpus,
                                             const MatchConfig& config);

/// As above, but passes each event to `sink` as it is found and reports
/// malformed lines to `on_error` instead of throwing. Returns false if
/// `on_error` asked to stop.
bool extract_events(std::istream& corpus, const MatchConfig& config,
                    const std::function<void(const AssociationEvent&)>& sink,
                    const DataErrorHandler& on_error);

/// noun<TAB>N1<TAB>classifier<TAB>N2<TAB>pattern<TAB>line:offset, with N1
/// written as "0" when the noun has no semantic class.
std::string render_event(const AssociationEvent& event);

/// Parses a line written by render_event. Only the fields that line carries
/// are filled: POS tags are set to NCMN and CL. Throws MalformedEventLine.
AssociationEvent parse_event_line(std::string_view line, std::size_t line_no);

}  // namespace nca
