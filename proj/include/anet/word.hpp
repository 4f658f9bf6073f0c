#ifndef ANET_WORD_HPP
#define ANET_WORD_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace anet {

/// Finite binary word. Stored as a '0'/'1' string so it hashes, orders and
/// prints without conversion.
class Word {
 public:
  Word() = default;
  /// InputError unless every character is '0' or '1'.
  static Word parse(std::string_view text);
  static Word of_bit(int bit);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }
  const std::string& str() const { return bits_; }

  void push_back(int bit);
  /// bit followed by *this
  Word prepend(int bit) const;
  Word substr(std::size_t pos, std::size_t len) const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string bits_;
};

/// First k symbols of the Thue-Morse word; bit i is the parity of popcount(i).
/// InputError when k == 0.
Word thue_morse_prefix(std::size_t k);

}  // namespace anet

template <>
struct std::hash<anet::Word> {
  std::size_t operator()(const anet::Word& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};

#endif  // ANET_WORD_HPP
