#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nca/lexicon.hpp"

namespace nca {

struct Piece {
  std::string surface;
  bool known = false;

  bool operator==(const Piece&) const = default;
};

struct Segmentation {
  std::vector<Piece> pieces;

  bool operator==(const Segmentation&) const = default;
};

/// Dictionary segmentation of unspaced text.
///
/// Whitespace is a hard boundary and is dropped. Each whitespace-free chunk
/// is split into lexicon words and unknown runs, choosing, in order of
/// precedence:
///   1. the fewest characters left in unknown runs,
///   2. the fewest pieces (an unknown run counts as one piece),
///   3. leftmost-longest: scanning from the left, the longest piece that
///      still admits an optimal completion.
/// Characters are UTF-8 code points; bytes that do not decode are taken one
/// at a time.
Segmentation segment(std::string_view text, const Lexicon& lexicon);

/// Segments a single whitespace-free chunk.
std::vector<Piece> segment_chunk(std::string_view chunk,
                                 const Lexicon& lexicon);

/// Byte offsets of code point starts in `text`, followed by text.size().
std::vector<std::size_t> code_point_boundaries(std::string_view text);

}  // namespace nca
