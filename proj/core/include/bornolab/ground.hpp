#ifndef BORNOLAB_GROUND_HPP
#define BORNOLAB_GROUND_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bornolab/errors.hpp"

namespace bornolab {

using Point = std::uint32_t;

/** A finite ordered set of named points; may be empty. */
class GroundSet {
public:
  static std::shared_ptr<const GroundSet> make(std::string name,
                                               std::vector<std::string> points);

  const std::string& name() const { return name_; }
  std::size_t size() const { return points_.size(); }
  const std::string& point_name(Point p) const { return points_.at(p); }
  std::optional<Point> point_by_name(const std::string& id) const;

private:
  GroundSet() = default;
  std::string name_;
  std::vector<std::string> points_;
};

using GroundPtr = std::shared_ptr<const GroundSet>;

/** A total map between ground sets. */
class GroundMap {
public:
  static GroundMap make(std::string name, GroundPtr src, GroundPtr dst,
                        std::vector<Point> table);
  static GroundMap identity(GroundPtr ground);

  const std::string& name() const { return name_; }
  const GroundPtr& src() const { return src_; }
  const GroundPtr& dst() const { return dst_; }
  Point eval(Point p) const { return table_.at(p); }
  const std::vector<Point>& table() const { return table_; }

  bool operator==(const GroundMap& o) const {
    return src_.get() == o.src_.get() && dst_.get() == o.dst_.get() && table_ == o.table_;
  }

private:
  GroundMap() = default;
  std::string name_;
  GroundPtr src_;
  GroundPtr dst_;
  std::vector<Point> table_;
};

GroundMap compose(const GroundMap& outer, const GroundMap& inner);

/** All ground maps src -> dst in a deterministic order (mixed-radix over
    declaration order). Empty src gives the single empty map; empty dst with
    non-empty src gives none. */
std::vector<GroundMap> all_ground_maps(const GroundPtr& src, const GroundPtr& dst);

} // namespace bornolab

#endif
