#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trisect/error.hpp"

namespace trisect {

/// Ordered table of generator names. Copies share the table; two alphabets
/// are interchangeable when they share the table or list the same names in
/// the same order. Cross-alphabet word operations are errors, not coercions.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_->size()); }
  const std::string& name(int index) const { return (*names_)[index]; }
  const std::vector<std::string>& names() const { return *names_; }

  /// Ordinal of `name`, or -1 when absent.
  int find(std::string_view name) const;
  bool same(const Alphabet& other) const;

  /// Names must be nonempty printable ASCII without whitespace or any of
  /// ^ - , ; ( ) [ ].
  static void validate_name(const std::string& name);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

struct Generator {
  std::string name;
  int index = 0;
};

/// One signed letter of a word; sign is +1 or -1.
struct Letter {
  int generator = 0;
  int sign = +1;
};

/// Freely reduced word over an alphabet. Letters are stored contiguously as
/// sign*(generator+1); the empty word is the group identity.
class Word {
 public:
  Word();
  explicit Word(Alphabet alphabet);

  /// Free reduction of a raw letter sequence (stack scan, O(n)).
  static Word reduce(const Alphabet& alphabet, std::span<const int32_t> raw);
  static Word letter(const Alphabet& alphabet, int generator, int sign = +1);

  const Alphabet& alphabet() const { return alphabet_; }
  int length() const { return static_cast<int>(codes_.size()); }
  bool empty() const { return codes_.empty(); }
  Letter at(int i) const;
  const std::vector<int32_t>& codes() const { return codes_; }

  Word inverse() const;
  Word pow(int exponent) const;
  Word cyclically_reduced() const;

  bool operator==(const Word& other) const;

  /// Canonical rendering: run-collapsed letters separated by spaces,
  /// "1" for the identity (e.g. "x1 y1^-2 x1").
  std::string str() const;

 private:
  Alphabet alphabet_;
  std::vector<int32_t> codes_;
};

Word concat(const Word& u, const Word& v);

///  u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);

/// Word-level homomorphism application: replace every letter by the image of
/// its generator (inverted for negative letters) and freely reduce. `images`
/// is indexed by the generator ordinals of u's alphabet and every image must
/// live over `target`.
Word substitute(const Word& u, std::span<const Word> images, const Alphabet& target);

/// Name-keyed variant; throws when a generator occurring in u has no image.
Word substitute(const Word& u, const std::map<std::string, Word>& images,
                const Alphabet& target);

}  // namespace trisect
