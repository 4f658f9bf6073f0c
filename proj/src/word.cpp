#include "anet/word.hpp"

#include <bit>

#include "anet/error.hpp"

namespace anet {

Word Word::parse(std::string_view text) {
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InputError("word '" + std::string(text) + "' is not over {0,1}");
    }
  }
  Word w;
  w.bits_ = std::string(text);
  return w;
}

Word Word::of_bit(int bit) {
  Word w;
  w.push_back(bit);
  return w;
}

void Word::push_back(int bit) { bits_.push_back(bit ? '1' : '0'); }

Word Word::prepend(int bit) const {
  Word w;
  w.bits_.reserve(bits_.size() + 1);
  w.bits_.push_back(bit ? '1' : '0');
  w.bits_ += bits_;
  return w;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  Word w;
  w.bits_ = bits_.substr(pos, len);
  return w;
}

Word thue_morse_prefix(std::size_t k) {
  if (k == 0) throw InputError("Thue-Morse prefix length must be positive");
  Word w;
  for (std::size_t i = 0; i < k; ++i) w.push_back(std::popcount(i) & 1);
  return w;
}

}  // namespace anet
