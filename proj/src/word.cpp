#include "trisect/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace trisect {

Alphabet::Alphabet() : names_(std::make_shared<const std::vector<std::string>>()) {}

Alphabet::Alphabet(std::vector<std::string> names) {
  for (const auto& name : names) validate_name(name);
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw Error("duplicate generator name '" + names[i] + "'");
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

void Alphabet::validate_name(const std::string& name) {
  if (name.empty()) throw Error("generator name must be nonempty");
  static constexpr std::string_view kForbidden = "^-,;()[]";
  for (unsigned char c : name) {
    if (c >= 0x80 || !std::isprint(c))
      throw Error("generator name '" + name + "' must be printable ASCII");
    if (std::isspace(c) || kForbidden.find(static_cast<char>(c)) != std::string_view::npos)
      throw Error("generator name '" + name + "' contains a forbidden character");
  }
}

int Alphabet::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if ((*names_)[i] == name) return i;
  return -1;
}

bool Alphabet::same(const Alphabet& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

Word::Word() = default;

Word::Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

Word Word::reduce(const Alphabet& alphabet, std::span<const int32_t> raw) {
  Word w(alphabet);
  w.codes_.reserve(raw.size());
  for (int32_t code : raw) {
    if (code == 0 || std::abs(code) > alphabet.size())
      throw Error("letter outside alphabet");
    if (!w.codes_.empty() && w.codes_.back() == -code)
      w.codes_.pop_back();
    else
      w.codes_.push_back(code);
  }
  return w;
}

Word Word::letter(const Alphabet& alphabet, int generator, int sign) {
  if (generator < 0 || generator >= alphabet.size())
    throw Error("generator index out of range");
  if (sign != 1 && sign != -1) throw Error("letter sign must be +1 or -1");
  Word w(alphabet);
  w.codes_.push_back(sign * (generator + 1));
  return w;
}

Letter Word::at(int i) const {
  const int32_t code = codes_.at(static_cast<size_t>(i));
  return {std::abs(code) - 1, code > 0 ? +1 : -1};
}

Word Word::inverse() const {
  Word w(alphabet_);
  w.codes_.reserve(codes_.size());
  for (auto it = codes_.rbegin(); it != codes_.rend(); ++it) w.codes_.push_back(-*it);
  return w;
}

Word Word::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Word result(alphabet_);
  for (int i = 0; i < exponent; ++i) result = concat(result, *this);
  return result;
}

Word Word::cyclically_reduced() const {
  Word w = *this;
  while (w.codes_.size() >= 2 && w.codes_.front() == -w.codes_.back()) {
    w.codes_.erase(w.codes_.begin());
    w.codes_.pop_back();
  }
  return w;
}

bool Word::operator==(const Word& other) const {
  return alphabet_.same(other.alphabet_) && codes_ == other.codes_;
}

std::string Word::str() const {
  if (codes_.empty()) return "1";
  std::ostringstream out;
  size_t i = 0;
  while (i < codes_.size()) {
    size_t j = i;
    while (j < codes_.size() && codes_[j] == codes_[i]) ++j;
    const Letter l = at(static_cast<int>(i));
    if (i > 0) out << ' ';
    out << alphabet_.name(l.generator);
    const long exponent = l.sign * static_cast<long>(j - i);
    if (exponent != 1) out << '^' << exponent;
    i = j;
  }
  return out.str();
}

Word concat(const Word& u, const Word& v) {
  if (!u.alphabet().same(v.alphabet())) throw Error("alphabet mismatch in concat");
  std::vector<int32_t> raw = u.codes();
  raw.reserve(raw.size() + v.codes().size());
  for (int32_t code : v.codes()) {
    if (!raw.empty() && raw.back() == -code)
      raw.pop_back();
    else
      raw.push_back(code);
  }
  return Word::reduce(u.alphabet(), raw);
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(u.inverse(), v.inverse()));
}

namespace {

void append_image(std::vector<int32_t>& raw, const Word& image, bool inverted) {
  if (!inverted) {
    raw.insert(raw.end(), image.codes().begin(), image.codes().end());
  } else {
    for (auto it = image.codes().rbegin(); it != image.codes().rend(); ++it)
      raw.push_back(-*it);
  }
}

}  // namespace

Word substitute(const Word& u, std::span<const Word> images, const Alphabet& target) {
  if (static_cast<int>(images.size()) != u.alphabet().size())
    throw Error("substitute needs one image per generator");
  std::vector<int32_t> raw;
  for (int32_t code : u.codes()) {
    const Word& image = images[static_cast<size_t>(std::abs(code) - 1)];
    if (!image.alphabet().same(target)) throw Error("image over wrong alphabet");
    append_image(raw, image, code < 0);
  }
  return Word::reduce(target, raw);
}

Word substitute(const Word& u, const std::map<std::string, Word>& images,
                const Alphabet& target) {
  std::vector<std::optional<Word>> table(static_cast<size_t>(u.alphabet().size()));
  for (const auto& [name, image] : images) {
    const int g = u.alphabet().find(name);
    if (g < 0) throw Error("image for unknown generator '" + name + "'");
    table[static_cast<size_t>(g)] = image;
  }
  std::vector<int32_t> raw;
  for (int32_t code : u.codes()) {
    const int g = std::abs(code) - 1;
    const auto& image = table[static_cast<size_t>(g)];
    if (!image) throw Error("no image for generator '" + u.alphabet().name(g) + "'");
    if (!image->alphabet().same(target)) throw Error("image over wrong alphabet");
    append_image(raw, *image, code < 0);
  }
  return Word::reduce(target, raw);
}

}  // namespace trisect
