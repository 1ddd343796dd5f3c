#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace apolar {

// Finite Hilbert function h_0, ..., h_s. Trailing zeros are trimmed.
class HSeq {
 public:
  HSeq() = default;
  HSeq(std::vector<int> values);  // NOLINT(google-explicit-constructor)
  HSeq(std::initializer_list<int> values) : HSeq(std::vector<int>(values)) {}

  // Comma-separated nonnegative integers. Throws ParseError.
  static HSeq parse(std::string_view text);

  const std::vector<int>& values() const { return v_; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  // 0 past the end.
  int operator[](std::size_t i) const { return i < v_.size() ? v_[i] : 0; }

  int socle_degree() const { return static_cast<int>(v_.size()) - 1; }
  int sum() const;
  int max() const;
  // d = max h occurs r+1 times.
  int max_repeats() const;
  // max |h_i - h_{i-1}| for i = 3..s.
  int delta() const;
  // Smallest t with h_{t+1} < h_t.
  std::optional<int> peak() const;
  // (i, m) for every fall h_{i+1} = h_i - m with m > 0.
  std::vector<std::pair<int, int>> falls() const;
  bool starts_133() const;

  HSeq with(std::size_t i, int value) const;
  std::string to_string() const;

  friend bool operator==(const HSeq&, const HSeq&) = default;
  friend auto operator<=>(const HSeq& a, const HSeq& b) { return a.v_ <=> b.v_; }

 private:
  std::vector<int> v_;
};

}  // namespace apolar
