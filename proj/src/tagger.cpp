#include "nca/tagger.hpp"

#include <stdexcept>

namespace nca {

std::vector<TaggedToken> tag(const Segmentation& pieces,
                             const Lexicon& lexicon,
                             const TaggerConfig& config) {
  if (config.unknown_pos.kind() == PosTag::Kind::CL)
    throw std::invalid_argument("unknown words cannot be tagged CL");

  std::vector<TaggedToken> out;
  out.reserve(pieces.pieces.size());
  for (const auto& piece : pieces.pieces) {
    auto entries = lexicon.lookup(piece.surface);
    if (!piece.known || entries.empty()) {
      out.push_back({piece.surface, config.unknown_pos, std::nullopt,
                     std::nullopt});
      continue;
    }
    const auto& best = entries.front();
    out.push_back({piece.surface, best.pos, best.sem, best.cltype});
  }
  return out;
}

void fill_from_lexicon(std::vector<TaggedToken>& tokens,
                       const Lexicon& lexicon) {
  for (auto& token : tokens) {
    bool is_cl = token.pos.kind() == PosTag::Kind::CL;
    if (token.sem && (token.cltype || !is_cl)) continue;
    for (const auto& entry : lexicon.lookup(token.surface)) {
      if (entry.pos != token.pos) continue;
      if (!token.sem) token.sem = entry.sem;
      if (is_cl && !token.cltype) token.cltype = entry.cltype;
      break;
    }
  }
}

}  // namespace nca
