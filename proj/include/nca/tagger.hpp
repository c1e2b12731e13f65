#pragma once

#include <vector>

#include "nca/corpus.hpp"
#include "nca/lexicon.hpp"
#include "nca/segmenter.hpp"

namespace nca {

struct TaggerConfig {
  PosTag unknown_pos = PosTag::Kind::UNK;
};

/// Unigram tagging: each known piece takes the first lexicon entry for its
/// surface (highest frequency); unknown pieces get `config.unknown_pos`.
/// Throws std::invalid_argument if unknown_pos is CL.
std::vector<TaggedToken> tag(const Segmentation& pieces,
                             const Lexicon& lexicon,
                             const TaggerConfig& config = {});

/// Fills a missing semantic class or classifier type from the first lexicon
/// entry with the same surface and POS. Tokens that already carry the field
/// are left alone.
void fill_from_lexicon(std::vector<TaggedToken>& tokens,
                       const Lexicon& lexicon);

}  // namespace nca
