#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "omega/pipeline.hpp"
#include "omega/summatory.hpp"
#include "omega/w3.hpp"

namespace omega {

using Json = nlohmann::ordered_json;

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string tool_version;
  double elapsed_seconds = 0;
  std::vector<std::string> outputs;
};

inline constexpr const char* kToolVersion = "1.0.0";

Json to_json(const BoundSpec& b);
Json to_json(const PipelineReport& r);
Json to_json(const IterationResult& s);
Json to_json(const Table1& t);
Json to_json(const MBounds& m);
Json to_json(const SmallMBounds& m);
Json to_json(const ExtremaRecord& e);
Json to_json(const S3Estimate& s);
Json to_json(const RunManifest& m);

// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace omega
