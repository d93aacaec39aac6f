#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace positroid {

// Output JSON keeps insertion order so fixtures are byte-stable.
using Json = nlohmann::ordered_json;

// Colouring of a fixed point. A coloop strand has every boundary vertex on its
// right (it belongs to every necklace term); a loop strand has them all on its
// left.
enum class Decoration : std::uint8_t { None, Loop, Coloop };

/// A permutation of [n] (1-based) with a loop/coloop colouring on its fixed
/// points. Instances are always valid: every constructor validates.
class DecoratedPermutation {
 public:
  /// Throws Error with SizeTooSmall, NotABijection, UndecoratedFixedPoint or
  /// DecoratedNonFixedPoint.
  DecoratedPermutation(std::vector<int> image, std::vector<Decoration> decoration);

  /// Convenience for permutations without fixed points.
  explicit DecoratedPermutation(std::vector<int> image);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  Decoration decoration(int i) const { return decoration_[static_cast<std::size_t>(i - 1)]; }
  bool is_fixed(int i) const { return (*this)(i) == i; }

  const std::vector<int>& images() const { return image_; }
  const std::vector<Decoration>& decorations() const { return decoration_; }

  DecoratedPermutation inverse() const;

  // Conjugate by the relabelling i -> i + shift (mod n).
  DecoratedPermutation rotated(int shift) const;

  auto operator<=>(const DecoratedPermutation&) const = default;
  bool operator==(const DecoratedPermutation&) const = default;

 private:
  std::vector<int> image_;
  std::vector<Decoration> decoration_;
};

/// Reduces i into [1, n].
inline int wrap(int i, int n) {
  int r = (i - 1) % n;
  return (r < 0 ? r + n : r) + 1;
}

/// A clockwise interval of [n] with independently open or closed endpoints.
/// (i, j) = {i+1, ..., j-1} mod n. With start == end the closed interval is
/// the singleton and every other variant is empty.
struct CyclicInterval {
  int start;
  int end;
  bool include_start;
  bool include_end;
  int n;

  static CyclicInterval closed(int a, int b, int n) { return {a, b, true, true, n}; }
  static CyclicInterval open(int a, int b, int n) { return {a, b, false, false, n}; }
  static CyclicInterval left_closed(int a, int b, int n) { return {a, b, true, false, n}; }
  static CyclicInterval right_closed(int a, int b, int n) { return {a, b, false, true, n}; }

  bool contains(int x) const;
  std::vector<int> members() const;
  int size() const { return static_cast<int>(members().size()); }
};

// Clockwise distance from `from` to x, in [0, n).
inline int clockwise_offset(int from, int x, int n) { return wrap(x - from + 1, n) - 1; }

/// One-line notation: token j is the image of j; fixed points carry "+"
/// (coloop) or "-" (loop).
DecoratedPermutation parse_permutation(std::string_view text);
std::string format_permutation(const DecoratedPermutation& p);

bool is_connected(const DecoratedPermutation& p);

/// Number of i with pi(i) >= i, coloops counted, loops not.
int noninversion_count(const DecoratedPermutation& p);

/// True iff boundary vertex w lies strictly to the left of the strand starting
/// at strand-vertex j, i.e. w in (j, pi(j)].
bool left_of_strand(const DecoratedPermutation& p, int j, int w);

/// All connected decorated permutations of [n] in lexicographic order of
/// their one-line notation. Connected permutations with n >= 2 have no fixed
/// points.
std::vector<DecoratedPermutation> connected_permutations(int n);

/// Every decorated permutation of [n] (both colours on each fixed point).
std::vector<DecoratedPermutation> all_decorated_permutations(int n);

/// The uniform (k, n) permutation j -> j - k.
DecoratedPermutation uniform_permutation(int k, int n);

Json to_json(const DecoratedPermutation& p);
DecoratedPermutation permutation_from_json(const Json& j);

}  // namespace positroid
