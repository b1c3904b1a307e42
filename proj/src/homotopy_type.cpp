#include "hic/homotopy_type.hpp"

#include <sstream>

namespace hic {

HomotopyType HomotopyType::sphere(int dim, std::uint64_t count) {
  if (dim < 0) throw HomotopyError("sphere dimension must be non-negative; use empty()");
  return wedge({{dim, count}});
}

HomotopyType HomotopyType::wedge(std::map<int, std::uint64_t> spheres) {
  std::erase_if(spheres, [](const auto& entry) { return entry.second == 0; });
  if (spheres.empty()) return contractible();
  if (spheres.begin()->first < 0) throw HomotopyError("wedge summands need dimension >= 0");
  return HomotopyType(Kind::kWedge, std::move(spheres));
}

std::string HomotopyType::to_string() const {
  switch (kind_) {
    case Kind::kContractible: return "contractible";
    case Kind::kEmpty: return "empty";
    case Kind::kWedge: break;
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& [dim, count] : spheres_) {
    if (!first) out << " v ";
    first = false;
    if (count > 1) out << count << 'x';
    out << "S^" << dim;
  }
  return out.str();
}

HomotopyType suspend(const HomotopyType& t, unsigned r) {
  if (r == 0) return t;
  switch (t.kind()) {
    case HomotopyType::Kind::kContractible: return t;
    case HomotopyType::Kind::kEmpty: return HomotopyType::sphere(static_cast<int>(r) - 1);
    case HomotopyType::Kind::kWedge: break;
  }
  std::map<int, std::uint64_t> shifted;
  for (const auto& [dim, count] : t.spheres()) shifted[dim + static_cast<int>(r)] = count;
  return HomotopyType::wedge(std::move(shifted));
}

HomotopyType wedge_combine(std::span<const HomotopyType> parts) {
  std::map<int, std::uint64_t> merged;
  for (const auto& part : parts) {
    if (part.is_empty()) throw HomotopyError("the empty complex is not a wedge summand");
    for (const auto& [dim, count] : part.spheres()) merged[dim] += count;
  }
  return HomotopyType::wedge(std::move(merged));
}

bool dims_mod_r_valid(const HomotopyType& t, unsigned r) {
  if (r == 0) return false;
  for (const auto& [dim, count] : t.spheres()) {
    const int shifted = dim + 1;
    if (shifted < static_cast<int>(r) || shifted % static_cast<int>(r) != 0) return false;
  }
  return true;
}

Json to_json(const HomotopyType& t) {
  switch (t.kind()) {
    case HomotopyType::Kind::kContractible: return {{"type", "contractible"}};
    case HomotopyType::Kind::kEmpty: return {{"type", "empty"}};
    case HomotopyType::Kind::kWedge: break;
  }
  Json spheres = Json::array();
  for (const auto& [dim, count] : t.spheres()) spheres.push_back({{"dim", dim}, {"count", count}});
  return {{"type", "wedge"}, {"spheres", spheres}};
}

HomotopyType homotopy_type_from_json(const Json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "contractible") return HomotopyType::contractible();
  if (type == "empty") return HomotopyType::empty();
  if (type != "wedge") throw HomotopyError("unknown homotopy type '" + type + "'");
  std::map<int, std::uint64_t> spheres;
  for (const auto& entry : j.at("spheres")) {
    spheres[entry.at("dim").get<int>()] += entry.at("count").get<std::uint64_t>();
  }
  if (spheres.empty()) throw HomotopyError("wedge without spheres");
  return HomotopyType::wedge(std::move(spheres));
}

}  // namespace hic
