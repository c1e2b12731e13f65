#include "nca/matcher.hpp"

#include <algorithm>
#include <stdexcept>

#include "text.hpp"

namespace nca {

namespace {

constexpr const char* kPatternNames[kPatternCount] = {
    "enum", "ord", "ref", "indef", "attr", "mod", "pron",
};

using Kind = PosTag::Kind;

bool has_kind(const TaggedToken& t, Kind k) { return t.pos.kind() == k; }

bool is_rel_pronoun(const TaggedToken& t,
                    const std::set<std::string, std::less<>>& linkers) {
  if (has_kind(t, Kind::REL_M)) return true;
  return has_kind(t, Kind::ITR_M) && linkers.contains(t.surface);
}

std::optional<std::size_t> nearest_left(
    std::span<const TaggedToken> tokens, std::size_t from, std::size_t stop,
    const std::function<bool(const TaggedToken&)>& pred) {
  for (std::size_t i = from; i-- > stop;) {
    if (pred(tokens[i])) return i;
  }
  return std::nullopt;
}

}  // namespace

const char* pattern_name(PatternId id) {
  return kPatternNames[static_cast<std::size_t>(id)];
}

std::optional<PatternId> parse_pattern_name(std::string_view name) {
  for (auto id : kAllPatterns) {
    if (name == pattern_name(id)) return id;
  }
  return std::nullopt;
}

PatternSet PatternSet::parse(std::string_view list) {
  PatternSet set;
  for (auto name : text::split(list, ',')) {
    name = text::trim(name);
    if (name.empty()) continue;
    auto id = parse_pattern_name(name);
    if (!id)
      throw std::invalid_argument("unknown pattern '" + std::string(name) +
                                  "'");
    set.add(*id);
  }
  return set;
}

void MatchConfig::validate() const {
  if (linkers.empty()) throw std::invalid_argument("linker set is empty");
  window.validate();
}

bool MatchConfig::is_noun(const PosTag& pos) const {
  return std::find(noun_tags.begin(), noun_tags.end(), pos) != noun_tags.end();
}

std::optional<std::size_t> resolve_gap(
    std::span<const TaggedToken> tokens, std::size_t b_index,
    const std::function<bool(const TaggedToken&)>& is_noun,
    const GapSearchConfig& gaps,
    const std::set<std::string, std::less<>>& linkers) {
  b_index = std::min(b_index, tokens.size());
  auto a1 = nearest_left(tokens, b_index, 0, is_noun);

  std::size_t span_stop = b_index > gaps.rel_span ? b_index - gaps.rel_span : 0;
  auto p1 = nearest_left(tokens, b_index, span_stop,
                         [&](const TaggedToken& t) {
                           return is_rel_pronoun(t, linkers);
                         });
  if (!p1) return a1;

  auto a2 = nearest_left(tokens, *p1, 0, is_noun);
  if (!a2) return a1;
  if (!a1) return a2;
  // Both lie left of B, so "farther from B" is "smaller index".
  return *a2 < *a1 ? a2 : a1;
}

std::vector<AssociationEvent> match_fragment(const Fragment& fragment,
                                             const MatchConfig& config) {
  std::vector<AssociationEvent> events;
  const auto& toks = fragment.tokens;
  const std::size_t b = fragment.cl_index;
  if (b >= toks.size()) return events;
  const auto& anchor = toks[b];
  if (!has_kind(anchor, Kind::CL) || !anchor.cltype) return events;

  auto at = [&](std::size_t i) -> const TaggedToken* {
    return i < toks.size() ? &toks[i] : nullptr;
  };
  const TaggedToken* prev = b > 0 ? &toks[b - 1] : nullptr;
  const TaggedToken* next = at(b + 1);
  const TaggedToken* next2 = at(b + 2);

  auto noun_pred = [&](const TaggedToken& t) { return config.is_noun(t.pos); };
  auto noun_or_verb = [&](const TaggedToken& t) {
    return config.is_noun(t.pos) || has_kind(t, Kind::VERB);
  };

  auto emit = [&](PatternId id, std::size_t noun_index) {
    events.push_back({toks[noun_index], anchor, id, fragment.origin});
  };
  auto separated = [&](PatternId id, std::size_t b_pos,
                       const std::function<bool(const TaggedToken&)>& pred) {
    auto a = resolve_gap(toks, b_pos, pred, config.gaps, config.linkers);
    if (a) emit(id, *a);
  };

  const bool ordinal_fixed = next && next2 &&
                             next->surface == config.ordinal_marker &&
                             has_kind(*next2, Kind::NCNM);

  for (auto id : kAllPatterns) {
    if (!config.patterns.contains(id)) continue;
    switch (id) {
      case PatternId::Enumeration:
        if (prev && has_kind(*prev, Kind::NCNM)) {
          if (config.include_verbs)
            separated(id, b - 1, noun_or_verb);
          else
            separated(id, b - 1, noun_pred);
        }
        break;
      case PatternId::Ordinal:
        if (ordinal_fixed) separated(id, b, noun_pred);
        break;
      case PatternId::Referential:
        if (next && has_kind(*next, Kind::DET)) separated(id, b, noun_pred);
        break;
      case PatternId::IndefDemo:
        if (prev && has_kind(*prev, Kind::DET)) separated(id, b - 1, noun_pred);
        break;
      case PatternId::Attributive:
        if (next && has_kind(*next, Kind::VATT)) separated(id, b, noun_pred);
        break;
      case PatternId::NounModifier:
        if (next && config.is_noun(next->pos)) emit(id, b + 1);
        break;
      case PatternId::Pronoun: {
        // The ordinal marker doubles as a linker; when it introduces a
        // number the phrase is an ordinal, not a pronoun.
        if (!next || ordinal_fixed) break;
        auto k = next->pos.kind();
        bool marker = k == Kind::REL_M || k == Kind::ITR_M ||
                      k == Kind::DONM || k == Kind::DDAC ||
                      config.linkers.contains(next->surface);
        if (marker) separated(id, b, noun_pred);
        break;
      }
    }
  }
  return events;
}

std::vector<AssociationEvent> match_line(std::span<const TaggedToken> line,
                                         std::size_t line_no,
                                         const MatchConfig& config) {
  std::vector<AssociationEvent> events;
  for (const auto& frag : extract_fragments(line, config.window, line_no)) {
    auto found = match_fragment(frag, config);
    events.insert(events.end(), found.begin(), found.end());
  }
  return events;
}

bool extract_events(std::istream& corpus, const MatchConfig& config,
                    const std::function<void(const AssociationEvent&)>& sink,
                    const DataErrorHandler& on_error) {
  config.validate();
  text::LineReader reader(corpus);
  std::string line;
  while (reader.next(line)) {
    std::vector<TaggedToken> tokens;
    try {
      tokens = parse_tagged_line(line, reader.line_no());
    } catch (const DataError& err) {
      if (!on_error(err)) return false;
      continue;
    }
    for (const auto& ev : match_line(tokens, reader.line_no(), config))
      sink(ev);
  }
  return true;
}

std::vector<AssociationEvent> extract_events(std::istream& corpus,
                                             const MatchConfig& config) {
  std::vector<AssociationEvent> events;
  extract_events(
      corpus, config,
      [&](const AssociationEvent& ev) { events.push_back(ev); },
      [](const DataError&) -> bool { throw; });
  return events;
}

std::string render_event(const AssociationEvent& event) {
  std::string out = event.noun.surface;
  out += '\t';
  out += event.noun.sem ? event.noun.sem->str() : "0";
  out += '\t';
  out += event.classifier.surface;
  out += '\t';
  out += event.classifier.cltype ? to_string(*event.classifier.cltype) : "0";
  out += '\t';
  out += pattern_name(event.pattern);
  out += '\t';
  out += std::to_string(event.origin.line) + ":" +
         std::to_string(event.origin.offset);
  return out;
}

AssociationEvent parse_event_line(std::string_view line, std::size_t line_no) {
  auto fields = text::split(line, '\t');
  if (fields.size() != 6)
    throw MalformedEventLine(line_no, "expected 6 tab-separated fields");
  AssociationEvent ev;
  if (!is_valid_surface(fields[0]))
    throw MalformedEventLine(line_no, "invalid noun surface");
  ev.noun = {std::string(fields[0]), Kind::NCMN, std::nullopt, std::nullopt};
  if (fields[1] != "0") {
    ev.noun.sem = SemClassCode::parse(fields[1]);
    if (!ev.noun.sem) throw MalformedEventLine(line_no, "bad noun class");
  }
  if (!is_valid_surface(fields[2]))
    throw MalformedEventLine(line_no, "invalid classifier surface");
  ev.classifier = {std::string(fields[2]), Kind::CL, std::nullopt,
                   parse_classifier_type(fields[3])};
  if (!ev.classifier.cltype)
    throw MalformedEventLine(line_no, "classifier type must be 1 or 2");
  auto pattern = parse_pattern_name(fields[4]);
  if (!pattern) throw MalformedEventLine(line_no, "unknown pattern");
  ev.pattern = *pattern;
  auto where = text::split(fields[5], ':');
  std::optional<std::uint64_t> l, o;
  if (where.size() == 2) {
    l = text::parse_uint(where[0]);
    o = text::parse_uint(where[1]);
  }
  if (!l || !o) throw MalformedEventLine(line_no, "origin must be line:offset");
  ev.origin = {static_cast<std::size_t>(*l), static_cast<std::size_t>(*o)};
  return ev;
}

}  // namespace nca
