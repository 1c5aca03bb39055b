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

#ifndef SPPART_IO_HPP_
#define SPPART_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sppart/core.hpp"
#include "sppart/error.hpp"
#include "sppart/similarity.hpp"
#include "sppart/stats.hpp"

namespace sppart {

namespace fs = std::filesystem;

inline std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes to a temporary sibling, then renames over the target.
inline void WriteFileAtomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) Fail(ErrorCode::kIo, "cannot write " + temp.string());
    out << content;
    out.flush();
    if (!out) Fail(ErrorCode::kIo, "short write to " + temp.string());
  }
  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) Fail(ErrorCode::kIo, "cannot rename onto " + path.string() + ": " + ec.message());
}

namespace detail {

struct Field {
  std::string_view text;
  int column = 1;  // 1-based character column
};

struct Line {
  std::string_view text;
  int number = 1;
};

// Lines of `content` without terminators; a trailing empty line is dropped.
inline std::vector<Line> SplitLines(std::string_view content) {
  std::vector<Line> lines;
  int number = 1;
  std::size_t start = 0;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    start = end + 1;
  }
  return lines;
}

inline std::vector<Field> SplitFields(std::string_view line) {
  std::vector<Field> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
    fields.push_back({line.substr(start, end - start), static_cast<int>(start) + 1});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] inline void ParseFail(const std::string& source, int line,
                                   int column, const std::string& message) {
  Fail(ErrorCode::kParse, source + ":" + std::to_string(line) + ":" +
                              std::to_string(column) + ": " + message);
}

inline bool Blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

inline std::int64_t ParseInteger(std::string_view text, const std::string& source,
                                 int line, int column, std::int64_t lo,
                                 std::int64_t hi) {
  if (text.empty()) ParseFail(source, line, column, "expected an integer");
  std::int64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      ParseFail(source, line, column,
                "expected a non-negative integer, got '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
    if (value > hi) break;
  }
  if (value < lo || value > hi) {
    ParseFail(source, line, column,
              "value " + std::string(text) + " outside [" + std::to_string(lo) +
                  ", " + std::to_string(hi) + "]");
  }
  return value;
}

inline std::int64_t ParseDecimalAt(std::string_view text, const std::string& source,
                                   int line, int column, bool allow_negative) {
  try {
    return ParseMicros(text, allow_negative);
  } catch (const Error& e) {
    ParseFail(source, line, column, e.what());
  }
}

}  // namespace detail

// Dense similarity matrix: one row per agent, comma-separated decimals in
// [0,1] with at most six fractional digits.
inline std::vector<Similarity> ParseSimilarityCsv(std::string_view content,
                                                  int rows, int cols,
                                                  const std::string& source) {
  std::vector<Similarity> out;
  out.reserve(static_cast<std::size_t>(rows) * cols);
  int row = 0;
  for (const auto& line : detail::SplitLines(content)) {
    if (detail::Blank(line.text)) continue;
    if (row == rows) {
      detail::ParseFail(source, line.number, 1,
                        "more than the " + std::to_string(rows) + " expected rows");
    }
    const auto fields = detail::SplitFields(line.text);
    if (static_cast<int>(fields.size()) != cols) {
      const int column = static_cast<int>(fields.size()) > cols
                             ? fields[cols].column
                             : static_cast<int>(line.text.size()) + 1;
      detail::ParseFail(source, line.number, column,
                        "expected " + std::to_string(cols) + " values, found " +
                            std::to_string(fields.size()));
    }
    for (const auto& field : fields) {
      const auto micros = detail::ParseDecimalAt(field.text, source, line.number,
                                                 field.column, false);
      if (micros > kScale) {
        detail::ParseFail(source, line.number, field.column,
                          "similarity " + std::string(field.text) + " exceeds 1");
      }
      out.push_back(Similarity::FromMicros(micros));
    }
    ++row;
  }
  if (row != rows) {
    detail::ParseFail(source, static_cast<int>(detail::SplitLines(content).size()) + 1,
                      1, "expected " + std::to_string(rows) + " rows, found " +
                             std::to_string(row));
  }
  return out;
}

inline std::string FormatSimilarityCsv(const Instance& instance) {
  std::string out;
  for (int a = 0; a < instance.num_agents(); ++a) {
    for (int p = 0; p < instance.num_papers(); ++p) {
      if (p) out += ',';
      out += instance.similarity(a, p).ToString();
    }
    out += '\n';
  }
  return out;
}

// "agent,paper" lines, 0-based.
inline std::vector<std::pair<int, int>> ParseAuthorship(std::string_view content,
                                                        int agents, int papers,
                                                        const std::string& source) {
  std::vector<std::pair<int, int>> out;
  for (const auto& line : detail::SplitLines(content)) {
    if (detail::Blank(line.text)) continue;
    const auto fields = detail::SplitFields(line.text);
    if (fields.size() != 2) {
      detail::ParseFail(source, line.number, 1, "expected 'agent,paper'");
    }
    const auto a = detail::ParseInteger(fields[0].text, source, line.number,
                                        fields[0].column, 0, agents - 1);
    const auto p = detail::ParseInteger(fields[1].text, source, line.number,
                                        fields[1].column, 0, papers - 1);
    out.emplace_back(static_cast<int>(a), static_cast<int>(p));
  }
  return out;
}

inline std::string FormatAuthorship(const Instance& instance) {
  std::string out;
  for (const auto& [a, p] : instance.AuthorshipPairs()) {
    out += std::to_string(a) + ',' + std::to_string(p) + '\n';
  }
  return out;
}

// key=value text; '#' starts a comment line. Keys keep file order.
using KeyValues = std::vector<std::pair<std::string, std::string>>;

inline KeyValues ParseKeyValues(std::string_view content, const std::string& source) {
  KeyValues out;
  for (const auto& line : detail::SplitLines(content)) {
    if (detail::Blank(line.text) || line.text.front() == '#') continue;
    const auto eq = line.text.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      detail::ParseFail(source, line.number, 1, "expected key=value");
    }
    const std::string key(line.text.substr(0, eq));
    for (const auto& kv : out) {
      if (kv.first == key) detail::ParseFail(source, line.number, 1, "duplicate key '" + key + "'");
    }
    out.emplace_back(key, std::string(line.text.substr(eq + 1)));
  }
  return out;
}

inline std::string FormatKeyValues(const KeyValues& kv) {
  std::string out;
  for (const auto& [k, v] : kv) out += k + '=' + v + '\n';
  return out;
}

// Instance manifest: key=value text naming the matrix file (and, in
// general mode, the authorship file) relative to the manifest.
//
//   mode=one-to-one | general
//   agents=N
//   papers=M
//   agent_load=K_A
//   paper_load=K_P
//   similarity=similarity.csv
//   authorship=authorship.csv
struct InstanceFiles {
  std::string manifest = "instance.txt";
  std::string similarity = "similarity.csv";
  std::string authorship = "authorship.csv";
};

inline Instance ParseInstance(std::string_view manifest_text,
                              const std::string& manifest_source,
                              const fs::path& base_dir) {
  ParseKeyValues(manifest_text, manifest_source);
  std::map<std::string, std::pair<std::string, int>> fields;
  int line_no = 0;
  for (const auto& line : detail::SplitLines(manifest_text)) {
    line_no = line.number;
    const auto eq = line.text.find('=');
    if (eq != std::string_view::npos && !line.text.empty() && line.text.front() != '#') {
      fields[std::string(line.text.substr(0, eq))] = {
          std::string(line.text.substr(eq + 1)), line.number};
    }
  }
  auto get = [&](const std::string& key) -> std::pair<std::string, int> {
    const auto it = fields.find(key);
    if (it == fields.end()) {
      detail::ParseFail(manifest_source, line_no + 1, 1, "missing key '" + key + "'");
    }
    return it->second;
  };
  auto get_int = [&](const std::string& key, std::int64_t lo, std::int64_t hi) {
    const auto [text, line] = get(key);
    return static_cast<int>(detail::ParseInteger(text, manifest_source, line,
                                                 static_cast<int>(key.size()) + 2, lo, hi));
  };
  for (const auto& [key, value] : fields) {
    static const char* known[] = {"mode", "agents", "papers", "agent_load",
                                  "paper_load", "similarity", "authorship"};
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) detail::ParseFail(manifest_source, value.second, 1, "unknown key '" + key + "'");
  }
  const auto [mode, mode_line] = get("mode");
  if (mode != "one-to-one" && mode != "general") {
    detail::ParseFail(manifest_source, mode_line, 6,
                      "mode must be 'one-to-one' or 'general'");
  }
  constexpr int kMaxSide = 1 << 20;
  const int agents = get_int("agents", 1, kMaxSide);
  const int papers = get_int("papers", 1, kMaxSide);
  const int agent_load = get_int("agent_load", 1, kMaxSide);
  const int paper_load = get_int("paper_load", 1, kMaxSide);
  const std::string sim_name = get("similarity").first;
  const auto sims = ParseSimilarityCsv(ReadFile(base_dir / sim_name), agents,
                                       papers, sim_name);
  if (mode == "one-to-one") {
    if (agents != papers || agent_load != paper_load) {
      detail::ParseFail(manifest_source, mode_line, 1,
                        "one-to-one mode needs agents == papers and equal loads");
    }
    return Instance::OneToOne(agents, agent_load, sims);
  }
  const std::string auth_name = get("authorship").first;
  const auto authorship = ParseAuthorship(ReadFile(base_dir / auth_name), agents,
                                          papers, auth_name);
  return Instance::General(agents, papers, sims, authorship,
                           {agent_load, paper_load});
}

inline Instance ReadInstance(const fs::path& manifest) {
  return ParseInstance(ReadFile(manifest), manifest.filename().string(),
                       manifest.parent_path());
}

inline KeyValues InstanceManifest(const Instance& instance,
                                  const InstanceFiles& files = {}) {
  KeyValues kv = {
      {"mode", instance.one_to_one() ? "one-to-one" : "general"},
      {"agents", std::to_string(instance.num_agents())},
      {"papers", std::to_string(instance.num_papers())},
      {"agent_load", std::to_string(instance.loads().agent)},
      {"paper_load", std::to_string(instance.loads().paper)},
      {"similarity", files.similarity},
  };
  if (!instance.one_to_one()) kv.emplace_back("authorship", files.authorship);
  return kv;
}

// Writes manifest, matrix and (general mode) authorship into `dir`.
inline fs::path WriteInstance(const Instance& instance, const fs::path& dir,
                              const InstanceFiles& files = {}) {
  WriteFileAtomic(dir / files.similarity, FormatSimilarityCsv(instance));
  if (!instance.one_to_one()) {
    WriteFileAtomic(dir / files.authorship, FormatAuthorship(instance));
  }
  const fs::path manifest = dir / files.manifest;
  WriteFileAtomic(manifest, FormatKeyValues(InstanceManifest(instance, files)));
  return manifest;
}

// Assignment file: header "agent,paper,dummy" and one pair per line; the
// flag marks pairs touching a padding agent or its submission.
inline std::string FormatAssignment(const Assignment& assignment, int real_agents,
                                    int real_papers) {
  std::string out = "agent,paper,dummy\n";
  for (const auto& pair : assignment.pairs) {
    const bool dummy = pair.agent >= real_agents || pair.paper >= real_papers;
    out += std::to_string(pair.agent) + ',' + std::to_string(pair.paper) + ',' +
           (dummy ? '1' : '0') + '\n';
  }
  return out;
}

inline Assignment ParseAssignment(std::string_view content, const std::string& source) {
  const auto lines = detail::SplitLines(content);
  if (lines.empty() || lines[0].text != "agent,paper,dummy") {
    detail::ParseFail(source, 1, 1, "expected header 'agent,paper,dummy'");
  }
  std::vector<ReviewPair> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (detail::Blank(line.text)) continue;
    const auto fields = detail::SplitFields(line.text);
    if (fields.size() != 3) {
      detail::ParseFail(source, line.number, 1, "expected 'agent,paper,dummy'");
    }
    constexpr std::int64_t kMax = 1 << 22;
    const auto a = detail::ParseInteger(fields[0].text, source, line.number, fields[0].column, 0, kMax);
    const auto p = detail::ParseInteger(fields[1].text, source, line.number, fields[1].column, 0, kMax);
    detail::ParseInteger(fields[2].text, source, line.number, fields[2].column, 0, 1);
    pairs.push_back({static_cast<int>(a), static_cast<int>(p)});
  }
  return Assignment::FromPairs(std::move(pairs));
}

// One subset label per line.
inline std::string FormatLabels(const std::vector<int>& labels) {
  std::string out;
  for (int s : labels) out += std::to_string(s) + '\n';
  return out;
}

inline std::vector<int> ParseLabels(std::string_view content, const std::string& source) {
  std::vector<int> labels;
  for (const auto& line : detail::SplitLines(content)) {
    if (detail::Blank(line.text)) {
      detail::ParseFail(source, line.number, 1, "empty line in label file");
    }
    labels.push_back(static_cast<int>(
        detail::ParseInteger(line.text, source, line.number, 1, 0, 1 << 20)));
  }
  return labels;
}

// Builds a partition from agent labels and optional submission labels; the
// subset count is one more than the largest label.
inline Partition PartitionFromLabels(std::vector<int> agent_labels,
                                     std::vector<int> paper_labels = {}) {
  Partition partition;
  int top = 1;
  for (int s : agent_labels) top = std::max(top, s);
  for (int s : paper_labels) top = std::max(top, s);
  partition.num_subsets = top + 1;
  partition.agent_subset = std::move(agent_labels);
  partition.paper_subset = std::move(paper_labels);
  return partition;
}

// Outcomes: header "paper,decision,score", then one submission per line.
inline OutcomeTable ParseOutcomes(std::string_view content, const std::string& source) {
  const auto lines = detail::SplitLines(content);
  if (lines.empty() || lines[0].text != "paper,decision,score") {
    detail::ParseFail(source, 1, 1, "expected header 'paper,decision,score'");
  }
  OutcomeTable table;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (detail::Blank(line.text)) continue;
    const auto fields = detail::SplitFields(line.text);
    if (fields.size() != 3) {
      detail::ParseFail(source, line.number, 1, "expected 'paper,decision,score'");
    }
    const int paper = static_cast<int>(detail::ParseInteger(
        fields[0].text, source, line.number, fields[0].column, 0, 1 << 22));
    if (fields[1].text.empty()) {
      detail::ParseFail(source, line.number, fields[1].column, "empty decision");
    }
    const auto score = detail::ParseDecimalAt(fields[2].text, source, line.number,
                                              fields[2].column, true);
    if (!table.by_paper.emplace(paper, Outcome{std::string(fields[1].text), score}).second) {
      detail::ParseFail(source, line.number, 1,
                        "submission " + std::to_string(paper) + " listed twice");
    }
  }
  return table;
}

inline std::string FormatOutcomes(const OutcomeTable& table) {
  std::string out = "paper,decision,score\n";
  for (const auto& [paper, outcome] : table.by_paper) {
    out += std::to_string(paper) + ',' + outcome.decision + ',' +
           FormatMicros(outcome.score_micros) + '\n';
  }
  return out;
}

}  // namespace sppart

#endif  // SPPART_IO_HPP_
