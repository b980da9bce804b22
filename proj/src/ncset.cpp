#include "invhom/ncset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "invhom/factorize.hpp"

namespace invhom {

LabeledPreimage star_action(bool t_acts, const LabeledPreimage& p) {
  if (!t_acts) return p;
  LabeledPreimage out(p.rbegin(), p.rend());
  for (auto& pt : out) pt.flip = !pt.flip;
  return out;
}

OrderMap::OrderMap(std::vector<int> image_in, int target_points_in)
    : target_points(target_points_in), image(std::move(image_in)) {
  if (image.empty() || target_points <= 0)
    throw SizeMismatch("order-preserving map needs nonempty source and target");
  int prev = 0;
  for (int v : image) {
    if (v < 0 || v >= target_points) throw IndexOutOfRange("order map image out of range");
    if (v < prev) throw NotMonotone("map is not order-preserving");
    prev = v;
  }
}

OrderMap OrderMap::identity(int points) {
  std::vector<int> image(points);
  std::iota(image.begin(), image.end(), 0);
  return OrderMap(std::move(image), points);
}

bool OrderMap::is_identity() const {
  if (target_points != source_points()) return false;
  for (int i = 0; i < source_points(); ++i)
    if (image[i] != i) return false;
  return true;
}

OrderMap OrderMap::compose(const OrderMap& rhs) const {
  if (rhs.target_points != source_points())
    throw SizeMismatch("order map composition size mismatch");
  std::vector<int> out(rhs.image.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = image[rhs.image[i]];
  return OrderMap(std::move(out), target_points);
}

std::string OrderMap::to_string() const {
  std::ostringstream os;
  os << source_points() - 1 << " -> " << target_points - 1 << " : [";
  for (std::size_t i = 0; i < image.size(); ++i) os << (i ? " " : "") << image[i];
  os << "]";
  return os.str();
}

std::vector<OrderMap> enumerate_monotone(int source_points, int target_points) {
  std::vector<OrderMap> out;
  std::vector<int> image(source_points, 0);
  while (true) {
    out.emplace_back(image, target_points);
    int i = source_points - 1;
    while (i >= 0 && image[i] == target_points - 1) --i;
    if (i < 0) break;
    const int v = image[i] + 1;
    for (int j = i; j < source_points; ++j) image[j] = v;
  }
  return out;
}

NCMorphism::NCMorphism(int source_points, int target_points,
                       std::vector<LabeledPreimage> preimages)
    : source_points_(source_points), preimages_(std::move(preimages)) {
  if (source_points <= 0 || target_points <= 0)
    throw SizeMismatch("objects [n] have at least one point");
  if (static_cast<int>(preimages_.size()) != target_points)
    throw SizeMismatch("expected one preimage per target point");
  target_of_.assign(source_points_, -1);
  flip_of_.assign(source_points_, false);
  for (int i = 0; i < target_points; ++i)
    for (const auto& pt : preimages_[i]) {
      if (pt.element < 0 || pt.element >= source_points_)
        throw IndexOutOfRange("preimage element out of range");
      if (target_of_[pt.element] != -1)
        throw SizeMismatch("source element appears in two preimages");
      target_of_[pt.element] = i;
      flip_of_[pt.element] = pt.flip;
    }
  for (int j = 0; j < source_points_; ++j)
    if (target_of_[j] == -1)
      throw SizeMismatch("source element missing from every preimage");
}

NCMorphism NCMorphism::identity(int points) {
  std::vector<LabeledPreimage> pre(points);
  for (int i = 0; i < points; ++i) pre[i] = {LabeledPoint{i, false}};
  return NCMorphism(points, points, std::move(pre));
}

const LabeledPreimage& NCMorphism::preimage(int i) const {
  if (i < 0 || i >= target_points()) throw IndexOutOfRange("target point out of range");
  return preimages_[i];
}

int NCMorphism::map(int j) const {
  if (j < 0 || j >= source_points_) throw IndexOutOfRange("source point out of range");
  return target_of_[j];
}

bool NCMorphism::flip(int j) const {
  if (j < 0 || j >= source_points_) throw IndexOutOfRange("source point out of range");
  return flip_of_[j];
}

NCMorphism NCMorphism::compose(const NCMorphism& rhs) const {
  if (rhs.target_points() != source_points_)
    throw SizeMismatch("composing morphisms with mismatched sizes");
  std::vector<LabeledPreimage> pre(target_points());
  for (int i = 0; i < target_points(); ++i) {
    LabeledPreimage acc;
    for (const auto& pt : preimages_[i]) {
      LabeledPreimage part = star_action(pt.flip, rhs.preimages_[pt.element]);
      acc.insert(acc.end(), part.begin(), part.end());
    }
    pre[i] = std::move(acc);
  }
  return NCMorphism(rhs.source_points_, target_points(), std::move(pre));
}

bool NCMorphism::operator<(const NCMorphism& rhs) const {
  if (source_points_ != rhs.source_points_) return source_points_ < rhs.source_points_;
  return preimages_ < rhs.preimages_;
}

std::string NCMorphism::to_string() const {
  std::ostringstream os;
  os << source_index() << " -> " << target_index();
  for (int i = 0; i < target_points(); ++i) {
    os << " ; " << i << ":";
    if (preimages_[i].empty()) {
      os << " .";
      continue;
    }
    for (const auto& pt : preimages_[i]) os << " " << pt.element << (pt.flip ? "-" : "+");
  }
  return os.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& what, std::size_t pos) {
  throw ParseError("morphism parse error at position " + std::to_string(pos) + ": " + what);
}

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) parse_fail(std::string("expected '") + c + "'", pos);
  }
  bool eat_arrow() {
    skip_ws();
    if (pos + 1 < s.size() && s[pos] == '-' && s[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }
  int number() {
    skip_ws();
    if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') parse_fail("expected a number", pos);
    long v = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      v = v * 10 + (s[pos] - '0');
      if (v > 1'000'000) parse_fail("number too large", pos);
      ++pos;
    }
    return static_cast<int>(v);
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
};

}  // namespace

NCMorphism NCMorphism::parse(const std::string& text) {
  Cursor c{text};
  const int n = c.number();
  if (!c.eat_arrow()) parse_fail("expected '->'", c.pos);
  const int m = c.number();
  std::vector<LabeledPreimage> pre(m + 1);
  for (int i = 0; i <= m; ++i) {
    if (!c.eat(';')) parse_fail("expected ';' before preimage of " + std::to_string(i), c.pos);
    const int target = c.number();
    if (target != i) parse_fail("preimages must be listed in target order", c.pos);
    c.expect(':');
    if (c.eat('.')) continue;  // written-out empty preimage
    while (true) {
      c.skip_ws();
      if (c.pos >= text.size() || text[c.pos] == ';') break;
      const int elt = c.number();
      bool flip;
      if (c.eat('+'))
        flip = false;
      else if (c.eat('-'))
        flip = true;
      else
        parse_fail("expected '+' or '-' after element", c.pos);
      pre[i].push_back(LabeledPoint{elt, flip});
    }
    if (pre[i].empty()) parse_fail("empty preimage must be written as '.'", c.pos);
  }
  if (!c.done()) parse_fail("trailing input", c.pos);
  return NCMorphism(n + 1, m + 1, std::move(pre));
}

std::string category_name(CategoryTag tag) {
  switch (tag) {
    case CategoryTag::Fas: return "F(as)";
    case CategoryTag::IFas: return "IF(as)";
    case CategoryTag::GammaAs: return "Gamma(as)";
    case CategoryTag::IGammaAs: return "IGamma(as)";
    case CategoryTag::Delta: return "Delta";
    case CategoryTag::DeltaR_op: return "DeltaR_op";
  }
  return "?";
}

bool is_in(const NCMorphism& f, CategoryTag tag) {
  auto all_plain = [&]() {
    for (int j = 0; j < f.source_points(); ++j)
      if (f.flip(j)) return false;
    return true;
  };
  switch (tag) {
    case CategoryTag::IFas:
      return true;
    case CategoryTag::Fas:
      return all_plain();
    case CategoryTag::IGammaAs:
      return f.is_based();
    case CategoryTag::GammaAs:
      return f.is_based() && all_plain();
    case CategoryTag::Delta: {
      if (!all_plain()) return false;
      for (int j = 0; j + 1 < f.source_points(); ++j)
        if (f.map(j) > f.map(j + 1)) return false;
      for (int i = 0; i < f.target_points(); ++i) {
        const auto& p = f.preimage(i);
        for (std::size_t k = 0; k + 1 < p.size(); ++k)
          if (p[k].element >= p[k + 1].element) return false;
      }
      return true;
    }
    case CategoryTag::DeltaR_op:
      return in_delta_r_op(f);
  }
  return false;
}

NCMorphism embed_group(const SignedPermutation& g) {
  const int points = g.size();
  std::vector<int> inv(points);
  for (int i = 0; i < points; ++i) inv[g.image_of(i)] = i;
  std::vector<LabeledPreimage> pre(points);
  for (int i = 0; i < points; ++i) pre[i] = {LabeledPoint{inv[i], g.label(i)}};
  return NCMorphism(points, points, std::move(pre));
}

NCMorphism embed_delta(const OrderMap& phi) {
  std::vector<LabeledPreimage> pre(phi.target_points);
  for (int j = 0; j < phi.source_points(); ++j)
    pre[phi.image[j]].push_back(LabeledPoint{j, false});
  return NCMorphism(phi.source_points(), phi.target_points, std::move(pre));
}

NCMorphism embed_reflection(int n) {
  std::vector<LabeledPreimage> pre(n + 1);
  pre[0] = {LabeledPoint{0, true}};
  for (int i = 1; i <= n; ++i) pre[i] = {LabeledPoint{n - i + 1, true}};
  return NCMorphism(n + 1, n + 1, std::move(pre));
}

NCMorphism face_morphism(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw IndexOutOfRange("face index out of range");
  std::vector<LabeledPreimage> pre(n);
  if (i < n) {
    for (int j = 0; j < i; ++j) pre[j] = {LabeledPoint{j, false}};
    pre[i] = {LabeledPoint{i, false}, LabeledPoint{i + 1, false}};
    for (int j = i + 1; j < n; ++j) pre[j] = {LabeledPoint{j + 1, false}};
  } else {
    pre[0] = {LabeledPoint{n, false}, LabeledPoint{0, false}};
    for (int j = 1; j < n; ++j) pre[j] = {LabeledPoint{j, false}};
  }
  return NCMorphism(n + 1, n, std::move(pre));
}

NCMorphism degeneracy_morphism(int n, int j) {
  if (n < 0 || j < 0 || j > n) throw IndexOutOfRange("degeneracy index out of range");
  std::vector<LabeledPreimage> pre(n + 2);
  for (int i = 0; i <= j; ++i) pre[i] = {LabeledPoint{i, false}};
  for (int i = j + 2; i <= n + 1; ++i) pre[i] = {LabeledPoint{i - 1, false}};
  return NCMorphism(n + 1, n + 2, std::move(pre));
}

std::size_t hom_count(int source_points, int target_points) {
  // |Hom([n],[m])| = binom(n+m+1, n+1) * (n+1)! * 2^(n+1)
  const int n1 = source_points, m1 = target_points;
  std::size_t binom = 1;
  for (int i = 1; i <= n1; ++i)
    binom = binom * static_cast<std::size_t>(m1 + i) / static_cast<std::size_t>(i);
  std::size_t count = binom;
  for (int i = 2; i <= n1; ++i) count *= static_cast<std::size_t>(i);
  for (int i = 0; i < n1; ++i) count *= 2;
  return count;
}

namespace {

void fill_preimages(int source_points, int target_points, int next_element,
                    std::vector<LabeledPreimage>& pre, std::vector<NCMorphism>& out) {
  if (next_element == source_points) {
    out.emplace_back(source_points, target_points, pre);
    return;
  }
  // Insert next_element into every slot of every preimage, with both labels.
  for (int i = 0; i < target_points; ++i) {
    auto& p = pre[i];
    for (std::size_t slot = 0; slot <= p.size(); ++slot)
      for (bool flip : {false, true}) {
        p.insert(p.begin() + static_cast<long>(slot), LabeledPoint{next_element, flip});
        fill_preimages(source_points, target_points, next_element + 1, pre, out);
        p.erase(p.begin() + static_cast<long>(slot));
      }
  }
}

}  // namespace

std::vector<NCMorphism> enumerate_homs(int source_points, int target_points, std::size_t cap) {
  if (hom_count(source_points, target_points) > cap)
    throw CapExceeded("hom-set enumeration exceeds cap");
  std::vector<NCMorphism> out;
  out.reserve(hom_count(source_points, target_points));
  std::vector<LabeledPreimage> pre(target_points);
  fill_preimages(source_points, target_points, 0, pre, out);
  return out;
}

NCMorphism random_morphism(Rng& rng, int source_points, int target_points) {
  std::vector<LabeledPreimage> pre(target_points);
  for (int j = 0; j < source_points; ++j) {
    auto& p = pre[rng.range(0, target_points - 1)];
    const auto slot = static_cast<long>(rng.below(p.size() + 1));
    p.insert(p.begin() + slot, LabeledPoint{j, rng.coin()});
  }
  return NCMorphism(source_points, target_points, std::move(pre));
}

NCMorphism random_based_morphism(Rng& rng, int source_points, int target_points) {
  NCMorphism f = random_morphism(rng, source_points, target_points);
  // Re-seat the source point 0 at a random slot of the preimage of 0.
  std::vector<LabeledPreimage> pre(f.preimages().begin(), f.preimages().end());
  auto& home = pre[f.map(0)];
  home.erase(std::find_if(home.begin(), home.end(),
                          [](const LabeledPoint& pt) { return pt.element == 0; }));
  auto& base = pre[0];
  const auto slot = static_cast<long>(rng.below(base.size() + 1));
  base.insert(base.begin() + slot, LabeledPoint{0, rng.coin()});
  return NCMorphism(source_points, target_points, std::move(pre));
}

}  // namespace invhom
