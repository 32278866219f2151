#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gbtc {

/// Signed generator index: +i is the i-th generator, -i its inverse (i >= 1).
using Letter = int;

/// Freely reduced word in the free group of a given rank.
class Word {
 public:
  explicit Word(int rank = 0) : rank_(rank) {}

  /// Freely reduces `letters`; throws InputError on a letter outside
  /// +-{1..rank}.
  static Word reduce(int rank, std::span<const Letter> letters);
  static Word reduce(int rank, std::initializer_list<Letter> letters) {
    return reduce(rank, std::span<const Letter>(letters.begin(), letters.size()));
  }
  static Word generator(int rank, int index);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word inverse() const;
  /// Same element viewed in a context of larger (or equal) rank.
  Word widened(int rank) const;

  /// Removes a maximal u...u^-1 wrapper; the result is conjugate to *this.
  Word cyclically_reduced() const;

  /// g1 g2^-1 ... ; "1" for the identity.
  std::string to_string() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int rank_ = 0;
  std::vector<Letter> letters_;
};

Word commutator(const Word& a, const Word& b);
/// w^n for any integer n.
Word power(const Word& w, long n);

/// Parses generators `g1..gN`, inverses `g1^-1`, powers `g2^3`, whitespace
/// concatenation, commutators `[u,v]` (nestable) and `1` for the identity.
/// Throws InputError on syntax errors or generators above `rank`.
Word parse_word(std::string_view text, int rank);
/// Largest generator index mentioned in `text` (0 if none).
int max_generator_index(std::string_view text);

/// Homomorphism F(domain_rank) -> F(codomain_rank) given on generators.
class FreeHom {
 public:
  FreeHom() = default;
  /// Throws InputError unless images.size() == domain_rank and every image
  /// has rank codomain_rank.
  FreeHom(int domain_rank, int codomain_rank, std::vector<Word> images);

  static FreeHom identity(int rank);

  int domain_rank() const { return domain_rank_; }
  int codomain_rank() const { return codomain_rank_; }
  const std::vector<Word>& images() const { return images_; }

  /// Throws InputError on a context mismatch.
  Word apply(const Word& w) const;
  std::vector<Word> apply(const std::vector<Word>& ws) const;

  /// (*this) after `first`.
  FreeHom after(const FreeHom& first) const;

  friend bool operator==(const FreeHom&, const FreeHom&) = default;

 private:
  int domain_rank_ = 0;
  int codomain_rank_ = 0;
  std::vector<Word> images_;
};

}  // namespace gbtc
