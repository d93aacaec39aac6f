#include "positroid/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "positroid/error.hpp"

namespace positroid {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::UndecoratedFixedPoint: return "UndecoratedFixedPoint";
    case ErrorCode::DecoratedNonFixedPoint: return "DecoratedNonFixedPoint";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::EqualVertices: return "EqualVertices";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::SubstitutionNotFound: return "SubstitutionNotFound";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::InconsistentModel: return "InconsistentModel";
    case ErrorCode::NonterminatingStrand: return "NonterminatingStrand";
    case ErrorCode::NoSuchFaceSide: return "NoSuchFaceSide";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NoRightmostMember: return "NoRightmostMember";
    case ErrorCode::SymbolNotRealizable: return "SymbolNotRealizable";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::RoundtripFailed: return "RoundtripFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

DecoratedPermutation::DecoratedPermutation(std::vector<int> image,
                                           std::vector<Decoration> decor)
    : image_(std::move(image)), decoration_(std::move(decor)) {
  const int n = size();
  if (n < 3) throw Error(ErrorCode::SizeTooSmall, "permutation size must be at least 3");
  if (decoration_.size() != image_.size())
    throw Error(ErrorCode::NotABijection, "decoration length differs from image length");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::NotABijection, "image is not a bijection of [n]");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int i = 1; i <= n; ++i) {
    bool fixed = (*this)(i) == i;
    Decoration d = decoration(i);
    if (fixed && d == Decoration::None)
      throw Error(ErrorCode::UndecoratedFixedPoint,
                  "fixed point " + std::to_string(i) + " needs a + or - decoration");
    if (!fixed && d != Decoration::None)
      throw Error(ErrorCode::DecoratedNonFixedPoint,
                  "position " + std::to_string(i) + " is decorated but not fixed");
  }
}

DecoratedPermutation::DecoratedPermutation(std::vector<int> image)
    : DecoratedPermutation(image, std::vector<Decoration>(image.size(), Decoration::None)) {}

DecoratedPermutation DecoratedPermutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return DecoratedPermutation(std::move(inv), decoration_);
}

DecoratedPermutation DecoratedPermutation::rotated(int shift) const {
  const int n = size();
  std::vector<int> img(image_.size());
  std::vector<Decoration> dec(image_.size());
  for (int i = 1; i <= n; ++i) {
    int j = wrap(i + shift, n);
    img[static_cast<std::size_t>(j - 1)] = wrap((*this)(i) + shift, n);
    dec[static_cast<std::size_t>(j - 1)] = decoration(i);
  }
  return DecoratedPermutation(std::move(img), std::move(dec));
}

bool CyclicInterval::contains(int x) const {
  int d = clockwise_offset(start, x, n);
  if (start == end) return d == 0 && include_start && include_end;
  int len = clockwise_offset(start, end, n);
  if (d == 0) return include_start;
  if (d == len) return include_end;
  return d < len;
}

std::vector<int> CyclicInterval::members() const {
  std::vector<int> out;
  for (int d = 0; d < n; ++d) {
    int x = wrap(start + d, n);
    if (contains(x)) out.push_back(x);
  }
  return out;
}

DecoratedPermutation parse_permutation(std::string_view text) {
  std::vector<int> image;
  std::vector<Decoration> dec;
  std::vector<std::string> tokens;
  {
    std::istringstream in{std::string(text)};
    for (std::string tok; in >> tok;) tokens.push_back(tok);
  }
  // Compact form for n <= 9: "256134", "21+3".
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    std::string one = tokens[0];
    tokens.clear();
    for (char c : one) {
      if ((c == '+' || c == '-') && !tokens.empty() && tokens.back().size() == 1) tokens.back() += c;
      else tokens.emplace_back(1, c);
    }
  }
  for (const std::string& tok : tokens) {
    Decoration d = Decoration::None;
    std::string_view digits = tok;
    if (digits.back() == '+' || digits.back() == '-') {
      d = digits.back() == '+' ? Decoration::Coloop : Decoration::Loop;
      digits.remove_suffix(1);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
      throw Error(ErrorCode::MalformedToken, "malformed token '" + tok + "'");
    image.push_back(value);
    dec.push_back(d);
  }
  return DecoratedPermutation(std::move(image), std::move(dec));
}

std::string format_permutation(const DecoratedPermutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(p(i));
    if (p.decoration(i) == Decoration::Coloop) out += '+';
    if (p.decoration(i) == Decoration::Loop) out += '-';
  }
  return out;
}

bool is_connected(const DecoratedPermutation& p) {
  const int n = p.size();
  for (int a = 1; a <= n; ++a) {
    for (int len = 1; len < n; ++len) {
      bool stable = true;
      for (int d = 0; d < len && stable; ++d) {
        int img = p(wrap(a + d, n));
        stable = clockwise_offset(a, img, n) < len;
      }
      if (stable) return false;
    }
  }
  return true;
}

int noninversion_count(const DecoratedPermutation& p) {
  int k = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) > i || p.decoration(i) == Decoration::Coloop) ++k;
  }
  return k;
}

bool left_of_strand(const DecoratedPermutation& p, int j, int w) {
  switch (p.decoration(j)) {
    case Decoration::Coloop: return false;
    case Decoration::Loop: return true;
    case Decoration::None: break;
  }
  return CyclicInterval::right_closed(j, p(j), p.size()).contains(w);
}

std::vector<DecoratedPermutation> connected_permutations(int n) {
  std::vector<DecoratedPermutation> out;
  if (n < 3) return out;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  do {
    bool has_fixed = false;
    for (int i = 0; i < n; ++i) has_fixed = has_fixed || img[static_cast<std::size_t>(i)] == i + 1;
    if (has_fixed) continue;
    DecoratedPermutation p(img);
    if (is_connected(p)) out.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<DecoratedPermutation> all_decorated_permutations(int n) {
  std::vector<DecoratedPermutation> out;
  if (n < 3) return out;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  do {
    std::vector<int> fixed;
    for (int i = 0; i < n; ++i)
      if (img[static_cast<std::size_t>(i)] == i + 1) fixed.push_back(i);
    for (unsigned mask = 0; mask < (1u << fixed.size()); ++mask) {
      std::vector<Decoration> dec(static_cast<std::size_t>(n), Decoration::None);
      for (std::size_t b = 0; b < fixed.size(); ++b)
        dec[static_cast<std::size_t>(fixed[b])] =
            (mask >> b) & 1u ? Decoration::Coloop : Decoration::Loop;
      out.emplace_back(img, std::move(dec));
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

DecoratedPermutation uniform_permutation(int k, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) img[static_cast<std::size_t>(j - 1)] = wrap(j - k, n);
  std::vector<Decoration> dec(static_cast<std::size_t>(n), Decoration::None);
  if (k == 0 || k == n)
    std::fill(dec.begin(), dec.end(), k == 0 ? Decoration::Loop : Decoration::Coloop);
  return DecoratedPermutation(std::move(img), std::move(dec));
}

Json to_json(const DecoratedPermutation& p) {
  Json coloops = Json::array(), loops = Json::array();
  for (int i = 1; i <= p.size(); ++i) {
    if (p.decoration(i) == Decoration::Coloop) coloops.push_back(i);
    if (p.decoration(i) == Decoration::Loop) loops.push_back(i);
  }
  Json out;
  out["n"] = p.size();
  out["image"] = p.images();
  out["coloops"] = coloops;
  out["loops"] = loops;
  return out;
}

DecoratedPermutation permutation_from_json(const Json& j) {
  try {
    auto image = j.at("image").get<std::vector<int>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(image.size()))
      throw Error(ErrorCode::ParseError, "field n disagrees with image length");
    std::vector<Decoration> dec(image.size(), Decoration::None);
    auto mark = [&](const char* key, Decoration d) {
      if (!j.contains(key)) return;
      for (int i : j.at(key).get<std::vector<int>>()) {
        if (i < 1 || i > static_cast<int>(image.size()))
          throw Error(ErrorCode::OutOfRange, std::string(key) + " entry out of range");
        dec[static_cast<std::size_t>(i - 1)] = d;
      }
    };
    mark("coloops", Decoration::Coloop);
    mark("loops", Decoration::Loop);
    return DecoratedPermutation(std::move(image), std::move(dec));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace positroid
