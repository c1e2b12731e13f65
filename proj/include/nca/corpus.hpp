#pragma once

// Token, tag and fragment types shared by every pipeline stage, plus the
// tagged-corpus line format:
//
//   surface/POS[/sem][/cltype]  surface/POS ...
//
// e.g. "nakrian/NCMN/111 3/NCNM khon/CL//1".

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nca {

class PosTag {
 public:
  enum class Kind {
    NCMN,   // common noun
    NCNM,   // cardinal number
    CL,     // classifier
    DET,    // determiner
    VATT,   // attributive verb
    REL_M,  // relative marker
    ITR_M,  // interrogative marker
    DONM,   // ordinal numeral
    DDAC,   // definite demonstrative
    VERB,
    UNK,
    OTHER,  // any other label, carried verbatim
  };

  PosTag() = default;
  PosTag(Kind kind) : kind_(kind) {}  // NOLINT: implicit by design of the enum

  /// Maps a label to its tag; unrecognised labels become OTHER(label).
  /// Returns nullopt for an empty label or one containing a delimiter.
  static std::optional<PosTag> parse(std::string_view label);

  static PosTag other(std::string label);

  Kind kind() const noexcept { return kind_; }
  std::string label() const;

  friend bool operator==(const PosTag& a, const PosTag& b) {
    return a.kind_ == b.kind_ && a.other_ == b.other_;
  }
  /// Orders by label text so that sorting is stable across kinds.
  friend std::strong_ordering operator<=>(const PosTag& a, const PosTag& b) {
    return a.label() <=> b.label();
  }

 private:
  Kind kind_ = Kind::UNK;
  std::string other_;
};

enum class ClassifierType { Unit = 1, Collective = 2 };

std::optional<ClassifierType> parse_classifier_type(std::string_view text);
/// "1" or "2".
const char* to_string(ClassifierType type);

/// Digit-path code into the concept hierarchy, e.g. "13111" (Animal).
/// Digits are 1-9 so that string prefix coincides with ancestry.
class SemClassCode {
 public:
  static std::optional<SemClassCode> parse(std::string_view text);

  const std::string& str() const noexcept { return digits_; }
  std::size_t depth() const noexcept { return digits_.size(); }
  bool is_root() const noexcept { return digits_.size() == 1; }

  /// Code with the last digit removed; nullopt at the root.
  std::optional<SemClassCode> parent() const;

  /// True iff this code is a strict prefix of `other`.
  bool is_strict_prefix_of(const SemClassCode& other) const;

  auto operator<=>(const SemClassCode&) const = default;

 private:
  explicit SemClassCode(std::string digits) : digits_(std::move(digits)) {}
  std::string digits_;
};

/// One (w,p,s) triple. `cltype` is only meaningful on classifiers.
struct TaggedToken {
  std::string surface;
  PosTag pos;
  std::optional<SemClassCode> sem;
  std::optional<ClassifierType> cltype;

  bool operator==(const TaggedToken&) const = default;
};

/// Position of a token in the source corpus: 1-based line, 0-based token
/// offset within that line.
struct Origin {
  std::size_t line = 0;
  std::size_t offset = 0;

  auto operator<=>(const Origin&) const = default;
};

/// Window of tokens around one classifier occurrence. `origin` locates the
/// anchor (tokens[cl_index]) in the corpus.
struct Fragment {
  std::vector<TaggedToken> tokens;
  std::size_t cl_index = 0;
  Origin origin;

  const TaggedToken& anchor() const { return tokens.at(cl_index); }
};

/// Checks the surface rules of the line format: non-empty, no whitespace,
/// no '/'.
bool is_valid_surface(std::string_view surface);

/// Parses one tagged-corpus line. `line_no` is only used in diagnostics.
/// Throws MalformedToken.
std::vector<TaggedToken> parse_tagged_line(std::string_view line,
                                           std::size_t line_no = 0);

std::string render_token(const TaggedToken& token);
std::string render_tagged_line(const std::vector<TaggedToken>& tokens);

}  // namespace nca
