#include "ctk/morphism.hpp"

#include <algorithm>
#include <sstream>

#include "ctk/errors.hpp"

namespace ctk {

bool PosetMap::surjective() const {
  ElementSet hit;
  for (int y : image) hit.insert(y);
  return hit == tgt.all();
}

std::string to_string(MorphismCondition c) {
  switch (c) {
    case MorphismCondition::none: return "none";
    case MorphismCondition::order_preserving: return "order-preserving";
    case MorphismCondition::up: return "up";
    case MorphismCondition::down: return "down";
  }
  return "none";
}

std::string MorphismReport::describe() const {
  if (ok) return "bi-p-morphism";
  std::ostringstream out;
  switch (condition) {
    case MorphismCondition::order_preserving:
      out << "order-preserving fails: " << x << " <= " << y << " but images are not ordered";
      break;
    case MorphismCondition::up:
      out << "up fails at " << x << ": target " << y << " above f(" << x << ") has no preimage above " << x;
      break;
    case MorphismCondition::down:
      out << "down fails at " << x << ": target " << y << " below f(" << x << ") has no preimage below " << x;
      break;
    case MorphismCondition::none:
      break;
  }
  return out.str();
}

MorphismReport check_bi_p_morphism(const PosetMap& f) {
  const Poset& s = f.src;
  const Poset& t = f.tgt;
  if (static_cast<int>(f.image.size()) != s.size()) throw ShapeError("map is not total on the source");
  for (int y : f.image)
    if (y < 0 || y >= t.size()) throw ShapeError("map sends an element outside the target");

  MorphismReport r;
  auto fail = [&](MorphismCondition c, int x, int y) {
    r.ok = false;
    r.condition = c;
    r.x = x;
    r.y = y;
    return r;
  };
  for (int x = 0; x < s.size(); ++x)
    for (int z = 0; z < s.size(); ++z)
      if (s.leq(x, z) && !t.leq(f.image[x], f.image[z])) return fail(MorphismCondition::order_preserving, x, z);

  auto image_of = [&](ElementSet elements) {
    ElementSet img;
    elements.for_each([&](int z) { img.insert(f.image[z]); });
    return img;
  };
  for (int x = 0; x < s.size(); ++x) {
    ElementSet missing = t.up(f.image[x]) - image_of(s.up(x));
    if (!missing.empty()) return fail(MorphismCondition::up, x, missing.min());
  }
  for (int x = 0; x < s.size(); ++x) {
    ElementSet missing = t.down(f.image[x]) - image_of(s.down(x));
    if (!missing.empty()) return fail(MorphismCondition::down, x, missing.min());
  }
  return r;
}

std::vector<PosetMap> enumerate_bi_p_morphisms(const Poset& src, const Poset& tgt) {
  std::vector<PosetMap> out;
  const int n = src.size();
  const int m = tgt.size();
  if (m == 0) {
    if (n == 0) out.push_back(PosetMap{src, tgt, {}});
    return out;
  }
  PosetMap f{src, tgt, std::vector<int>(n, 0)};
  while (true) {
    if (check_bi_p_morphism(f).ok) out.push_back(f);
    int pos = n;
    while (pos > 0) {
      --pos;
      if (++f.image[pos] < m) break;
      f.image[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

namespace {

// Backtracking in element-index order so the first solution found is the
// lexicographically least map.
class SurjectionSearch {
 public:
  SurjectionSearch(const CoTree& target, const CoTree& source)
      : tgt_(target), src_(source), n_(source.size()), m_(target.size()) {
    const Poset& s = src_.poset();
    candidates_.resize(n_);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < m_; ++y)
        // Up forces depth(f x) ≤ depth(x); Down forces height(f x) ≤ height(x).
        if (tgt_.depth(y) <= src_.depth(x) && tgt_.height(y) <= src_.height(x)) candidates_[x].push_back(y);
    up_due_.resize(n_);
    down_due_.resize(n_);
    for (int w = 0; w < n_; ++w) {
      up_due_[last_of(s.up(w))].push_back(w);
      down_due_[last_of(s.down(w))].push_back(w);
    }
    image_.assign(n_, -1);
    hits_.assign(m_, 0);
  }

  std::optional<std::vector<int>> run() {
    if (m_ > n_) return std::nullopt;
    if (place(0)) return image_;
    return std::nullopt;
  }

 private:
  static int last_of(ElementSet s) {
    auto e = s.elements();
    return e.back();
  }

  ElementSet image_of(ElementSet elements) const {
    ElementSet img;
    elements.for_each([&](int z) { img.insert(image_[z]); });
    return img;
  }

  bool consistent(int x) const {
    const Poset& s = src_.poset();
    const Poset& t = tgt_.poset();
    const int y = image_[x];
    for (int z = 0; z < x; ++z) {
      if (s.leq(z, x) && !t.leq(image_[z], y)) return false;
      if (s.leq(x, z) && !t.leq(y, image_[z])) return false;
    }
    for (int w : up_due_[x])
      if (!t.up(image_[w]).subset_of(image_of(s.up(w)))) return false;
    for (int w : down_due_[x])
      if (!t.down(image_[w]).subset_of(image_of(s.down(w)))) return false;
    return true;
  }

  bool place(int x) {
    if (x == n_) return covered_ == m_;
    for (int y : candidates_[x]) {
      image_[x] = y;
      if (hits_[y]++ == 0) ++covered_;
      bool feasible = (m_ - covered_) <= (n_ - x - 1) && consistent(x);
      if (feasible && place(x + 1)) return true;
      if (--hits_[y] == 0) --covered_;
    }
    image_[x] = -1;
    return false;
  }

  const CoTree& tgt_;
  const CoTree& src_;
  int n_;
  int m_;
  std::vector<std::vector<int>> candidates_;
  std::vector<std::vector<int>> up_due_;
  std::vector<std::vector<int>> down_due_;
  std::vector<int> image_;
  std::vector<int> hits_;
  int covered_ = 0;
};

}  // namespace

std::optional<PosetMap> leq_p(const CoTree& target, const CoTree& source) {
  auto image = SurjectionSearch(target, source).run();
  if (!image) return std::nullopt;
  return PosetMap{source.poset(), target.poset(), std::move(*image)};
}

std::optional<PosetMap> leq_p(const Poset& target, const Poset& source) {
  if (!is_cotree(target) || !is_cotree(source)) throw UsageError("leq_p is only defined between co-trees");
  return leq_p(CoTree(target), CoTree(source));
}

bool LeqpCache::operator()(const CanonicalCode& target, const CanonicalCode& source) {
  auto key = std::make_pair(target.text, source.text);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool result = leq_p(cotree_from_code(target), cotree_from_code(source)).has_value();
  memo_.emplace(std::move(key), result);
  return result;
}

}  // namespace ctk
