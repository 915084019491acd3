#pragma once

#include <string>

#include <json.hpp>

#include "qks/laurent.hpp"
#include "qks/partition.hpp"

namespace qks {

using json = nlohmann::ordered_json;

// Partitions serialize as arrays of parts, multipartitions as node-indexed
// arrays of those.
json to_json(const Partition& p);
json to_json(const MultiPartition& mp);

// {"coeffs":[c0,c1,...]} with coeffs[k] the coefficient of t^k.
json to_json(const UniPoly& f);

// {"terms":[{"arrows":{"0,1":e,...},"coeff":c}, ...]}; every arrow of the
// cycle appears in each term, keyed "i,j" for the arrow i -> j.
json to_json(const ArrowLaurent& f);

std::string arrow_key(int i, int r);

}  // namespace qks
