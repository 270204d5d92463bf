#pragma once

#include <json.hpp>

#include "hdpart/diagram.hpp"
#include "hdpart/ndarray.hpp"
#include "hdpart/partition.hpp"

namespace hdpart {

// {"rank": d, "bounds": [...], "entries": nested depth-d arrays}, trimmed.
nlohmann::json to_json(const NdArray& array);
nlohmann::json to_json(const DdPartition& pi);
// {"rank": d, "cells": [[...], ...]} sorted lexicographically.
nlohmann::json to_json(const DiagramSet& set);

/// Accepts the NdArray form; "rank" and "bounds" are optional when the
/// nested entries are rectangular. Throws InvalidArgument on malformed input.
NdArray ndarray_from_json(const nlohmann::json& j);
DdPartition partition_from_json(const nlohmann::json& j);
DiagramSet diagram_from_json(const nlohmann::json& j);

}  // namespace hdpart
