// Copyright 2026 The sppart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPPART_TOOLS_RENDER_HPP_
#define SPPART_TOOLS_RENDER_HPP_

#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "sppart/core.hpp"
#include "sppart/error.hpp"
#include "sppart/io.hpp"

namespace sppart::tools {

enum class Format { kText, kCsv, kJson };

inline Format ParseFormat(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  Fail(ErrorCode::kPrecondition, "unknown format '" + name + "' (text, csv, json)");
}

inline const char* FormatExtension(Format format) {
  switch (format) {
    case Format::kText:
      return "txt";
    case Format::kCsv:
      return "csv";
    case Format::kJson:
      return "json";
  }
  return "txt";
}

inline std::string CsvField(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// Same keys and values in every format; only the syntax differs.
inline std::string Render(const KeyValues& kv, Format format) {
  switch (format) {
    case Format::kText:
      return FormatKeyValues(kv);
    case Format::kCsv: {
      std::string out = "key,value\n";
      for (const auto& [k, v] : kv) out += CsvField(k) + ',' + CsvField(v) + '\n';
      return out;
    }
    case Format::kJson: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::object();
      for (const auto& [k, v] : kv) doc[k] = v;
      return doc.dump(2) + '\n';
    }
  }
  return {};
}

inline std::string Decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

inline std::string JoinInts(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

inline void AppendReport(KeyValues& kv, const Report& report) {
  kv.emplace_back("total_similarity", report.total_similarity.ToString());
  kv.emplace_back("opt_similarity", report.opt_similarity.ToString());
  kv.emplace_back("loss_fraction", report.loss_fraction.ToString());
  kv.emplace_back("loss_decimal", Decimal(report.loss_fraction.ToDouble()));
  kv.emplace_back("maxmin_value", report.maxmin_value.ToString());
  if (!report.subset_sizes.empty()) {
    kv.emplace_back("subset_sizes", JoinInts(report.subset_sizes));
  }
}

}  // namespace sppart::tools

#endif  // SPPART_TOOLS_RENDER_HPP_
