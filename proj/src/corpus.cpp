#include "nca/corpus.hpp"

#include <array>
#include <utility>

#include "nca/errors.hpp"
#include "text.hpp"

namespace nca {

namespace {

constexpr std::array<std::pair<PosTag::Kind, std::string_view>, 11>
    kNamedTags = {{
        {PosTag::Kind::NCMN, "NCMN"},
        {PosTag::Kind::NCNM, "NCNM"},
        {PosTag::Kind::CL, "CL"},
        {PosTag::Kind::DET, "DET"},
        {PosTag::Kind::VATT, "VATT"},
        {PosTag::Kind::REL_M, "REL_M"},
        {PosTag::Kind::ITR_M, "ITR_M"},
        {PosTag::Kind::DONM, "DONM"},
        {PosTag::Kind::DDAC, "DDAC"},
        {PosTag::Kind::VERB, "VERB"},
        {PosTag::Kind::UNK, "UNK"},
    }};

}  // namespace

std::optional<PosTag> PosTag::parse(std::string_view label) {
  if (!is_valid_surface(label)) return std::nullopt;
  for (const auto& [kind, name] : kNamedTags) {
    if (name == label) return PosTag(kind);
  }
  PosTag tag(Kind::OTHER);
  tag.other_ = std::string(label);
  return tag;
}

PosTag PosTag::other(std::string label) {
  auto tag = parse(label);
  if (!tag) throw std::invalid_argument("invalid POS label '" + label + "'");
  return *tag;
}

std::string PosTag::label() const {
  if (kind_ == Kind::OTHER) return other_;
  for (const auto& [kind, name] : kNamedTags) {
    if (kind == kind_) return std::string(name);
  }
  return {};
}

std::optional<ClassifierType> parse_classifier_type(std::string_view text) {
  if (text == "1") return ClassifierType::Unit;
  if (text == "2") return ClassifierType::Collective;
  return std::nullopt;
}

const char* to_string(ClassifierType type) {
  return type == ClassifierType::Unit ? "1" : "2";
}

std::optional<SemClassCode> SemClassCode::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    if (c < '1' || c > '9') return std::nullopt;
  }
  return SemClassCode(std::string(text));
}

std::optional<SemClassCode> SemClassCode::parent() const {
  if (is_root()) return std::nullopt;
  return SemClassCode(digits_.substr(0, digits_.size() - 1));
}

bool SemClassCode::is_strict_prefix_of(const SemClassCode& other) const {
  return digits_.size() < other.digits_.size() &&
         other.digits_.compare(0, digits_.size(), digits_) == 0;
}

bool is_valid_surface(std::string_view surface) {
  if (surface.empty()) return false;
  for (char c : surface) {
    if (c == '/' || text::is_space(c)) return false;
  }
  return true;
}

namespace {

TaggedToken parse_token(std::string_view raw, std::size_t line_no,
                        std::size_t column) {
  auto fail = [&](const std::string& reason) -> MalformedToken {
    return MalformedToken(line_no, column, std::string(raw), reason);
  };

  auto fields = text::split(raw, '/');
  if (fields.size() < 2) throw fail("expected surface/POS");
  if (fields.size() > 4) throw fail("too many '/'-separated fields");

  TaggedToken token;
  if (fields[0].empty()) throw fail("empty surface");
  token.surface = std::string(fields[0]);

  if (fields[1].empty()) throw fail("empty POS");
  token.pos = *PosTag::parse(fields[1]);

  if (fields.size() >= 3) {
    // An empty sem field is only a placeholder in front of a cltype.
    if (fields[2].empty()) {
      if (fields.size() == 3) throw fail("empty semantic class field");
    } else {
      token.sem = SemClassCode::parse(fields[2]);
      if (!token.sem) throw fail("semantic class must be digits 1-9");
    }
  }
  if (fields.size() == 4) {
    if (fields[3].empty()) throw fail("empty classifier type field");
    token.cltype = parse_classifier_type(fields[3]);
    if (!token.cltype) throw fail("classifier type must be 1 or 2");
    if (token.pos.kind() != PosTag::Kind::CL)
      throw fail("classifier type on a non-CL token");
  }
  return token;
}

}  // namespace

std::vector<TaggedToken> parse_tagged_line(std::string_view line,
                                           std::size_t line_no) {
  std::vector<TaggedToken> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && text::is_space(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !text::is_space(line[i])) ++i;
    tokens.push_back(
        parse_token(line.substr(start, i - start), line_no, start + 1));
  }
  return tokens;
}

std::string render_token(const TaggedToken& token) {
  std::string out = token.surface;
  out += '/';
  out += token.pos.label();
  if (token.cltype) {
    out += '/';
    if (token.sem) out += token.sem->str();
    out += '/';
    out += to_string(*token.cltype);
  } else if (token.sem) {
    out += '/';
    out += token.sem->str();
  }
  return out;
}

std::string render_tagged_line(const std::vector<TaggedToken>& tokens) {
  std::string out;
  for (const auto& token : tokens) {
    if (!out.empty()) out += ' ';
    out += render_token(token);
  }
  return out;
}

}  // namespace nca
