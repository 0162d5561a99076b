#ifndef SSG_PERM_HPP
#define SSG_PERM_HPP

#include <string>
#include <vector>

namespace ssg {

/// Permutation of {1..m}. Points are 1-based throughout the public API.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity

  // images[i] is the image of point i+1, values in 1..degree.
  static Perm from_images(std::vector<int> images);

  // Parses a product of disjoint cycles, e.g. "(1 4)(2 3)".
  // Separators are spaces or commas; "" and "()" denote the identity.
  // Throws std::invalid_argument on out-of-range or repeated points.
  static Perm parse_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  bool is_identity() const;

  Perm inverse() const;

  // Cycle notation with fixed points omitted; identity prints as "()".
  std::string to_cycles() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

// Right-to-left application: compose(a, b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);

// True iff ps is duplicate-free and closed under inverse.
bool is_symmetric_set(const std::vector<Perm>& ps);

// Index (0-based) of p^-1 within ps; throws if absent.
int inverse_index(const std::vector<Perm>& ps, int i);

}  // namespace ssg

#endif
