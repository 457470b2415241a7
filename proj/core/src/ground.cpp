#include "bornolab/ground.hpp"

namespace bornolab {

std::shared_ptr<const GroundSet> GroundSet::make(std::string name,
                                                 std::vector<std::string> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        fail(Errc::DuplicateName, "point '" + points[i] + "' declared twice");
  auto g = std::shared_ptr<GroundSet>(new GroundSet());
  g->name_ = std::move(name);
  g->points_ = std::move(points);
  return g;
}

std::optional<Point> GroundSet::point_by_name(const std::string& id) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == id) return static_cast<Point>(i);
  return std::nullopt;
}

GroundMap GroundMap::make(std::string name, GroundPtr src, GroundPtr dst,
                          std::vector<Point> table) {
  if (table.size() != src->size())
    fail(Errc::GroundMismatch, "map table does not cover '" + src->name() + "'");
  for (Point p : table)
    if (p >= dst->size()) fail(Errc::GroundMismatch, "map value outside '" + dst->name() + "'");
  GroundMap m;
  m.name_ = std::move(name);
  m.src_ = std::move(src);
  m.dst_ = std::move(dst);
  m.table_ = std::move(table);
  return m;
}

GroundMap GroundMap::identity(GroundPtr ground) {
  std::vector<Point> table(ground->size());
  for (Point p = 0; p < table.size(); ++p) table[p] = p;
  auto copy = ground;
  return make("id_" + ground->name(), std::move(copy), std::move(ground), std::move(table));
}

GroundMap compose(const GroundMap& outer, const GroundMap& inner) {
  if (inner.dst().get() != outer.src().get())
    fail(Errc::GroundMismatch, "composing ground maps over different middles");
  std::vector<Point> table(inner.src()->size());
  for (Point p = 0; p < table.size(); ++p) table[p] = outer.eval(inner.eval(p));
  return GroundMap::make(outer.name() + "." + inner.name(), inner.src(), outer.dst(),
                         std::move(table));
}

std::vector<GroundMap> all_ground_maps(const GroundPtr& src, const GroundPtr& dst) {
  std::vector<GroundMap> out;
  const std::size_t n = src->size();
  const std::size_t m = dst->size();
  if (n == 0) {
    out.push_back(GroundMap::make("g0", src, dst, {}));
    return out;
  }
  if (m == 0) return out;
  std::vector<Point> table(n, 0);
  std::size_t count = 0;
  while (true) {
    out.push_back(GroundMap::make("g" + std::to_string(count++), src, dst, table));
    std::size_t i = 0;
    while (i < n) {
      if (++table[i] < m) break;
      table[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

} // namespace bornolab
