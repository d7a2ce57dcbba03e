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
#ifndef BAYSEC_COMPOSITION_H_
#define BAYSEC_COMPOSITION_H_

#include <cstddef>

#include "baysec/channel.h"

namespace baysec {

// Parallel composition: the adversary sees one output from each channel
// for the same secret. Rows are outer products; output (o1, o2) is
// flattened row-major to o1 * m2 + o2.
Channel Parallel(const Channel& c1, const Channel& c2);

// Cascade composition: the first channel's output feeds the second.
// Plain matrix product; rows of the result are convex combinations of
// the rows of c2.
Channel Cascade(const Channel& c1, const Channel& c2);

// k-fold self-parallel composition, modeling k independent observations
// of the same secret through one channel.
Channel SelfParallel(const Channel& channel, std::size_t k);

}  // namespace baysec

#endif  // BAYSEC_COMPOSITION_H_
