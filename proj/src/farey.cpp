#include "markov/farey.hpp"

#include <algorithm>
#include <string>

#include "markov/error.hpp"

namespace markov {

FareyTriplet farey_root() { return FareyTriplet{Rational(0), Rational(1, 2), Rational(1)}; }

Rational mediant(const Rational& p, const Rational& q) {
  Rational m(p.get_num() + q.get_num(), p.get_den() + q.get_den());
  m.canonicalize();
  return m;
}

bool is_valid_farey(const FareyTriplet& t) {
  if (t.left < 0 || t.right > 1 || !(t.left < t.mid && t.mid < t.right)) return false;
  if (!(t.mid == mediant(t.left, t.right))) return false;
  BigInt det = t.left.get_num() * t.right.get_den() - t.right.get_num() * t.left.get_den();
  return abs(det) == 1;
}

std::pair<FareyTriplet, FareyTriplet> farey_children(const FareyTriplet& t) {
  if (!is_valid_farey(t)) throw Error(Errc::InvalidArgument, "not a Farey triplet");
  return {FareyTriplet{t.left, mediant(t.left, t.mid), t.mid},
          FareyTriplet{t.mid, mediant(t.mid, t.right), t.right}};
}

FareyTriplet farey_for_region(const BigInt& R, const MarkovList& list) {
  auto [t, position] = triplet_by_region(R, list);
  (void)position;
  if (is_singular(t)) throw Error(Errc::NotFound, "singular regions have no Farey triplet");
  std::vector<bool> path;  // true = left child, deepest step first
  const Triplet root = make_triplet(1, 5, 2);
  while (!(t == root)) {
    Triplet up = parent(t);
    path.push_back(t.z == up.R);
    t = std::move(up);
  }
  FareyTriplet f = farey_root();
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto [l, r] = farey_children(f);
    f = *it ? l : r;
  }
  return f;
}

Rational farey_edge_sequence(const FareyTriplet& t, EdgeSide side, std::int64_t k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
  const Rational& outer = side == EdgeSide::Left ? t.left : t.right;
  const BigInt kk(static_cast<long>(k));
  Rational v(t.mid.get_num() * kk + outer.get_num(), t.mid.get_den() * kk + outer.get_den());
  v.canonicalize();
  return v;
}

std::vector<PlotPoint> plot_points(unsigned depth, const MarkovList& list) {
  if (depth < 1 || depth > list.depth()) {
    throw Error(Errc::ResourceLimit, "plot depth " + std::to_string(depth) + " outside the generated list (depth " +
                                         std::to_string(list.depth()) + ")");
  }
  // Levels of both trees share breadth-first order.
  std::vector<FareyTriplet> level{farey_root()};
  for (unsigned d = 1; d < depth; ++d) {
    std::vector<FareyTriplet> next;
    next.reserve(level.size() * 2);
    for (const auto& f : level) {
      auto [l, r] = farey_children(f);
      next.push_back(std::move(l));
      next.push_back(std::move(r));
    }
    level.swap(next);
  }
  auto entries = list.level(depth);
  std::vector<PlotPoint> out;
  out.reserve(level.size());
  for (std::size_t i = 0; i < level.size(); ++i) {
    const BigInt& R = entries[i].triplet.R;
    out.push_back(PlotPoint{level[i].mid, R, log10_abs(R), depth});
  }
  std::sort(out.begin(), out.end(), [](const PlotPoint& a, const PlotPoint& b) { return a.farey < b.farey; });
  return out;
}

}  // namespace markov
