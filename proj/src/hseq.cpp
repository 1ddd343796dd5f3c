#include "apolar/hseq.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "apolar/errors.hpp"

namespace apolar {

HSeq::HSeq(std::vector<int> values) : v_(std::move(values)) {
  for (int x : v_) {
    if (x < 0) throw PreconditionFailed("Hilbert function entries must be nonnegative");
  }
  while (!v_.empty() && v_.back() == 0) v_.pop_back();
}

HSeq HSeq::parse(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos < text.size() && (text[pos] == '(' || text[pos] == '[')) {
    ++pos;
    auto close = text.find_last_not_of(" \t");
    if (close == std::string_view::npos || (text[close] != ')' && text[close] != ']')) {
      throw ParseError(text.size(), "unbalanced bracket");
    }
    text = text.substr(0, close);
  }
  for (;;) {
    skip_ws();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError(pos, "expected a nonnegative integer");
    if (value < 0) throw ParseError(pos, "negative entry");
    pos = static_cast<std::size_t>(ptr - text.data());
    out.push_back(value);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(pos, std::string("unexpected character '") + text[pos] + "'");
    ++pos;
  }
  return HSeq(std::move(out));
}

int HSeq::sum() const {
  int s = 0;
  for (int x : v_) s += x;
  return s;
}

int HSeq::max() const { return v_.empty() ? 0 : *std::max_element(v_.begin(), v_.end()); }

int HSeq::max_repeats() const {
  int d = max();
  return static_cast<int>(std::count(v_.begin(), v_.end(), d)) - 1;
}

int HSeq::delta() const {
  int best = 0;
  for (std::size_t i = 3; i < v_.size(); ++i) best = std::max(best, std::abs(v_[i] - v_[i - 1]));
  return best;
}

std::optional<int> HSeq::peak() const {
  for (std::size_t t = 0; t + 1 <= v_.size(); ++t) {
    if ((*this)[t + 1] < v_[t]) return static_cast<int>(t);
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> HSeq::falls() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i + 1 < v_.size(); ++i) {
    if (v_[i + 1] < v_[i]) out.emplace_back(static_cast<int>(i), v_[i] - v_[i + 1]);
  }
  return out;
}

bool HSeq::starts_133() const { return v_.size() >= 3 && v_[0] == 1 && v_[1] == 3 && v_[2] == 3; }

HSeq HSeq::with(std::size_t i, int value) const {
  std::vector<int> v = v_;
  if (v.size() <= i) v.resize(i + 1, 0);
  v[i] = value;
  return HSeq(std::move(v));
}

std::string HSeq::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v_[i]);
  }
  return out;
}

}  // namespace apolar
