#include "sgal/errors.hpp"
#include "sgal/psg.hpp"

#include <cctype>

namespace sgal {

Psg fan(std::size_t n) {
  if (n < 1) throw PreconditionError("FAN(n) needs n >= 1");
  if (n > kMaxPsgBasis) throw GuardrailError("FAN(n) basis too large", "n <= " + std::to_string(kMaxPsgBasis));
  const std::size_t sz = std::size_t{1} << n;
  const Element m1{1};
  std::vector<BitVec> sets(sz, BitVec(sz));
  for (std::size_t x = 0; x < sz; ++x) {
    sets[x].set(0);
    sets[x].set(x);
  }
  for (std::size_t y = 0; y < sz; ++y) sets[m1.bits].set(y);
  return Psg("FAN(" + std::to_string(n) + ")", n, m1, std::move(sets));
}

namespace {

Psg trivial_sg() { return Psg::from_lists("TRIVIAL_SG", 0, Element{0}, {{Element{0}}}); }

Psg z2_real() { return Psg::from_lists("Z2_REAL", 1, Element{1}, {{Element{0}}, {Element{0}, Element{1}}}); }

Psg f3like() {
  return Psg::from_lists("F3LIKE", 1, Element{1}, {{Element{0}, Element{1}}, {Element{0}, Element{1}}});
}

class CatalogParser {
 public:
  explicit CatalogParser(const std::string& text) : text_(text) {}

  Psg parse() {
    Psg p = term();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("unknown catalog name '" + text_ + "' (" + why + ")");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Psg term() {
    const std::string id = identifier();
    if (id == "TRIVIAL_SG") return trivial_sg();
    if (id == "Z2_REAL") return z2_real();
    if (id == "F3LIKE") return f3like();
    if (id == "FAN2") return fan(2).renamed("FAN2");
    if (id == "FAN") {
      expect('(');
      const std::string num = identifier();
      expect(')');
      std::size_t n = 0;
      for (char c : num) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("FAN expects a number");
        n = n * 10 + static_cast<std::size_t>(c - '0');
        if (n > 1000) fail("FAN argument too large");
      }
      return fan(n);
    }
    if (id == "PRODUCT") {
      expect('(');
      Psg acc = term();
      std::size_t count = 1;
      while (accept(',')) {
        acc = product(acc, term());
        ++count;
      }
      expect(')');
      if (count < 2) fail("PRODUCT needs at least two arguments");
      return acc;
    }
    fail("no such entry");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Psg catalog(const std::string& name) { return CatalogParser(name).parse(); }

std::vector<std::string> catalog_names() {
  return {"TRIVIAL_SG", "Z2_REAL", "F3LIKE", "FAN2", "FAN(n)", "PRODUCT(A,B,...)"};
}

}  // namespace sgal
