#include "nca/concordancer.hpp"

#include <algorithm>
#include <stdexcept>

namespace nca {

void WindowConfig::validate() const {
  if (before > kMaxFragment || after > kMaxFragment ||
      before + after + 1 > kMaxFragment)
    throw std::invalid_argument("window " + std::to_string(before) + "," +
                                std::to_string(after) + " exceeds " +
                                std::to_string(kMaxFragment) + " tokens");
}

std::vector<Fragment> extract_fragments(std::span<const TaggedToken> line,
                                        const WindowConfig& config,
                                        std::size_t line_no) {
  config.validate();
  std::vector<Fragment> out;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i].pos.kind() != PosTag::Kind::CL) continue;
    std::size_t first = i >= config.before ? i - config.before : 0;
    std::size_t last = std::min(line.size() - 1, i + config.after);
    Fragment frag;
    frag.tokens.assign(line.begin() + first, line.begin() + last + 1);
    frag.cl_index = i - first;
    frag.origin = {line_no, i};
    out.push_back(std::move(frag));
  }
  return out;
}

std::string render_fragment(const Fragment& fragment) {
  std::string out;
  for (std::size_t i = 0; i < fragment.tokens.size(); ++i) {
    if (i) out += ' ';
    if (i == fragment.cl_index) out += '[';
    out += render_token(fragment.tokens[i]);
    if (i == fragment.cl_index) out += ']';
  }
  return out;
}

}  // namespace nca
