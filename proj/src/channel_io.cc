// Copyright 2026 The Baysec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "baysec/channel_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "baysec/error.h"

namespace baysec {

namespace {

std::string FormatDouble(double v) {
  char buf[32];
  auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

double ParseDouble(std::string_view token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  while (last != first && (*(last - 1) == ' ' || *(last - 1) == '\t' ||
                           *(last - 1) == '\r')) {
    --last;
  }
  auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc() || result.ptr != last) {
    throw Error(ErrorCode::kParseError,
                "cannot parse '" + std::string(token) + "' as a number");
  }
  return value;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    fields.push_back(field);
  }
  return fields;
}

}  // namespace

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void WriteTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + path);
  }
  out << content;
}

Channel ParseChannelCsv(const std::string& text, bool renormalize) {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string prefix = "# labels:";
      if (line.rfind(prefix, 0) == 0) {
        for (auto& f : SplitCsvLine(line.substr(prefix.size()))) {
          std::string trimmed = f;
          while (!trimmed.empty() && trimmed.front() == ' ')
            trimmed.erase(trimmed.begin());
          labels.push_back(trimmed);
        }
      }
      continue;
    }
    std::vector<double> row;
    for (const auto& field : SplitCsvLine(line)) {
      row.push_back(ParseDouble(field));
    }
    rows.push_back(std::move(row));
  }
  Channel channel = Channel::FromRows(std::move(rows), renormalize);
  if (!labels.empty()) channel.set_secret_labels(std::move(labels));
  return channel;
}

std::string FormatChannelCsv(const Channel& channel) {
  std::ostringstream out;
  if (!channel.secret_labels().empty()) {
    out << "# labels:";
    for (std::size_t s = 0; s < channel.secret_labels().size(); ++s) {
      out << (s == 0 ? " " : ",") << channel.secret_labels()[s];
    }
    out << "\n";
  }
  for (std::size_t s = 0; s < channel.secret_count(); ++s) {
    for (std::size_t o = 0; o < channel.observable_count(); ++o) {
      if (o) out << ",";
      out << FormatDouble(channel.at(s, o));
    }
    out << "\n";
  }
  return out.str();
}

Channel LoadChannelCsv(const std::string& path, bool renormalize) {
  return ParseChannelCsv(ReadTextFile(path), renormalize);
}

void SaveChannelCsv(const Channel& channel, const std::string& path) {
  WriteTextFile(path, FormatChannelCsv(channel));
}

Channel ParseChannelJson(const std::string& text, bool renormalize) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!j.contains("rows") || !j["rows"].is_array()) {
    throw Error(ErrorCode::kParseError, "channel JSON lacks \"rows\"");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : j["rows"]) {
    rows.push_back(row.get<std::vector<double>>());
  }
  Channel channel = Channel::FromRows(std::move(rows), renormalize);
  if (j.contains("secret_labels")) {
    channel.set_secret_labels(
        j["secret_labels"].get<std::vector<std::string>>());
  }
  if (j.contains("observable_labels")) {
    channel.set_observable_labels(
        j["observable_labels"].get<std::vector<std::string>>());
  }
  return channel;
}

std::string FormatChannelJson(const Channel& channel) {
  nlohmann::json j;
  auto rows = nlohmann::json::array();
  for (std::size_t s = 0; s < channel.secret_count(); ++s) {
    auto row = nlohmann::json::array();
    for (std::size_t o = 0; o < channel.observable_count(); ++o) {
      row.push_back(channel.at(s, o));
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  if (!channel.secret_labels().empty()) {
    j["secret_labels"] = channel.secret_labels();
  }
  if (!channel.observable_labels().empty()) {
    j["observable_labels"] = channel.observable_labels();
  }
  return j.dump(2) + "\n";
}

Channel LoadChannelJson(const std::string& path, bool renormalize) {
  return ParseChannelJson(ReadTextFile(path), renormalize);
}

void SaveChannelJson(const Channel& channel, const std::string& path) {
  WriteTextFile(path, FormatChannelJson(channel));
}

Channel LoadChannelAuto(const std::string& path, bool renormalize) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    return LoadChannelJson(path, renormalize);
  }
  return LoadChannelCsv(path, renormalize);
}

Prior LoadPriorJson(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ReadTextFile(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!j.contains("weights")) {
    throw Error(ErrorCode::kParseError, "prior JSON lacks \"weights\"");
  }
  return Prior::FromWeights(j["weights"].get<std::vector<double>>());
}

void SavePriorJson(const Prior& prior, const std::string& path) {
  nlohmann::json j;
  j["weights"] = prior.weights();
  WriteTextFile(path, j.dump(2) + "\n");
}

}  // namespace baysec
