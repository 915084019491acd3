#include "qks/json_io.hpp"

namespace qks {

json to_json(const Partition& p) {
  return json(p.parts());
}

json to_json(const MultiPartition& mp) {
  json out = json::array();
  for (const auto& p : mp.components()) out.push_back(to_json(p));
  return out;
}

json to_json(const UniPoly& f) {
  json out;
  out["coeffs"] = f.coeffs();
  return out;
}

std::string arrow_key(int i, int r) {
  return std::to_string(i) + "," + std::to_string((i + 1) % r);
}

json to_json(const ArrowLaurent& f) {
  json terms = json::array();
  for (const auto& [exps, c] : f.terms()) {
    json arrows;
    for (int i = 0; i < f.r(); ++i) arrows[arrow_key(i, f.r())] = exps[i];
    terms.push_back({{"arrows", arrows}, {"coeff", c}});
  }
  json out;
  out["terms"] = terms;
  return out;
}

}  // namespace qks
