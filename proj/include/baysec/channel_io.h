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
#ifndef BAYSEC_CHANNEL_IO_H_
#define BAYSEC_CHANNEL_IO_H_

#include <string>

#include "baysec/channel.h"

namespace baysec {

// Channel CSV: one row per secret, comma-separated decimal floats. An
// optional `# labels: a,b,c` comment carries secret labels. Values are
// written with shortest round-trip precision, so load(save(c)) is
// bit-exact.
Channel LoadChannelCsv(const std::string& path, bool renormalize = false);
void SaveChannelCsv(const Channel& channel, const std::string& path);
Channel ParseChannelCsv(const std::string& text, bool renormalize = false);
std::string FormatChannelCsv(const Channel& channel);

// Channel JSON: {"rows": [[...]], "secret_labels": [...],
// "observable_labels": [...]}.
Channel LoadChannelJson(const std::string& path, bool renormalize = false);
void SaveChannelJson(const Channel& channel, const std::string& path);
Channel ParseChannelJson(const std::string& text, bool renormalize = false);
std::string FormatChannelJson(const Channel& channel);

// Loads CSV or JSON depending on the file extension (.json vs anything
// else).
Channel LoadChannelAuto(const std::string& path, bool renormalize = false);

// Prior JSON: {"weights": [...]}.
Prior LoadPriorJson(const std::string& path);
void SavePriorJson(const Prior& prior, const std::string& path);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& content);

}  // namespace baysec

#endif  // BAYSEC_CHANNEL_IO_H_
