#include "gbtc/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "gbtc/errors.hpp"

namespace gbtc {

Word Word::reduce(int rank, std::span<const Letter> letters) {
  Word w(rank);
  for (Letter x : letters) {
    if (x == 0 || std::abs(x) > rank)
      throw InputError("generator index " + std::to_string(x) +
                       " out of range for rank " + std::to_string(rank));
    if (!w.letters_.empty() && w.letters_.back() == -x)
      w.letters_.pop_back();
    else
      w.letters_.push_back(x);
  }
  return w;
}

Word Word::generator(int rank, int index) {
  Letter x = index;
  return reduce(rank, std::span<const Letter>(&x, 1));
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::widened(int rank) const {
  if (rank < rank_) throw InputError("cannot narrow a word to a smaller rank");
  Word w = *this;
  w.rank_ = rank;
  return w;
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  Word w(rank_);
  w.letters_.assign(letters_.begin() + static_cast<long>(lo),
                    letters_.begin() + static_cast<long>(hi));
  return w;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (Letter x : letters_) {
    if (!out.empty()) out += ' ';
    out += 'g' + std::to_string(std::abs(x));
    if (x < 0) out += "^-1";
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  if (a.rank_ != b.rank_) throw InputError("word product across different ranks");
  Word w = a;
  for (Letter x : b.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -x)
      w.letters_.pop_back();
    else
      w.letters_.push_back(x);
  }
  return w;
}

Word commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

Word power(const Word& w, long n) {
  Word base = n < 0 ? w.inverse() : w;
  Word out(w.rank());
  for (long i = 0; i < std::labs(n); ++i) out = out * base;
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  Word parse() {
    Word w = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  Word word() {
    Word w(rank_);
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ',' || text_[pos_] == ']') return w;
      w = w * factor();
    }
  }

  Word factor() {
    Word base(rank_);
    char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      Word a = word();
      expect(',');
      Word b = word();
      expect(']');
      base = commutator(a, b);
    } else if (c == 'g' || c == 'x') {
      ++pos_;
      long index = integer();
      if (index < 1 || index > rank_)
        fail("generator " + std::to_string(index) + " out of range for rank " +
             std::to_string(rank_));
      base = Word::generator(rank_, static_cast<int>(index));
    } else if (c == '1') {
      ++pos_;
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return power(base, integer());
    }
    return base;
  }

  long integer() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) fail("expected an integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_space();
    if (pos_ == text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("word syntax at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, int rank) { return WordParser(text, rank).parse(); }

int max_generator_index(std::string_view text) {
  int best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'g' && text[i] != 'x') continue;
    std::size_t j = i + 1;
    int value = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      value = value * 10 + (text[j++] - '0');
    if (j > i + 1) best = std::max(best, value);
  }
  return best;
}

FreeHom::FreeHom(int domain_rank, int codomain_rank, std::vector<Word> images)
    : domain_rank_(domain_rank), codomain_rank_(codomain_rank), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != domain_rank_)
    throw InputError("homomorphism needs one image per domain generator");
  for (const Word& w : images_)
    if (w.rank() != codomain_rank_)
      throw InputError("homomorphism image lives in the wrong rank context");
}

FreeHom FreeHom::identity(int rank) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  return FreeHom(rank, rank, std::move(images));
}

Word FreeHom::apply(const Word& w) const {
  if (w.rank() != domain_rank_)
    throw InputError("word of rank " + std::to_string(w.rank()) +
                     " applied to homomorphism with domain rank " +
                     std::to_string(domain_rank_));
  Word out(codomain_rank_);
  for (Letter x : w.letters()) {
    const Word& image = images_[static_cast<std::size_t>(std::abs(x) - 1)];
    out = out * (x > 0 ? image : image.inverse());
  }
  return out;
}

std::vector<Word> FreeHom::apply(const std::vector<Word>& ws) const {
  std::vector<Word> out;
  out.reserve(ws.size());
  for (const Word& w : ws) out.push_back(apply(w));
  return out;
}

FreeHom FreeHom::after(const FreeHom& first) const {
  if (first.codomain_rank_ != domain_rank_)
    throw InputError("cannot compose homomorphisms with mismatched ranks");
  return FreeHom(first.domain_rank_, codomain_rank_, apply(first.images_));
}

}  // namespace gbtc
