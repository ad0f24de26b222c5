// Copyright 2026 The ccqsim authors
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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccq/operators.hpp"

namespace ccq {

/// Finite input alphabet; letters are 0..size-1.
struct Alphabet {
  int size = 0;
};

/// A block input: a word of letters, length k.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);
Word word_from_string(const std::string& s);

/// All size^k words of length k, in mixed-radix (lexicographic) order.
std::vector<Word> enumerate_words(Alphabet alphabet, int k);

// A channel with two classical senders and one quantum receiver: a complete
// table (x, y) -> state of a fixed output dimension.
class CcqChannel {
 public:
  /// states indexed x * ny + y, one per input pair.
  CcqChannel(int nx, int ny, int dim, std::vector<DensityOperator> states);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int dim() const { return dim_; }
  const DensityOperator& state(int x, int y) const;

 private:
  int nx_;
  int ny_;
  int dim_;
  std::vector<DensityOperator> states_;
};

/// dim = nx*ny; output (1-p)|i(x,y)><i(x,y)| + p/dim with i(x,y) = x*ny + y.
CcqChannel depolarizing_channel(double p, int nx, int ny);

/// Classical channel as diagonal states: rows indexed x * ny + y, each a
/// distribution over the output set; dim = row length.
CcqChannel classical_channel_embedding(const std::vector<std::vector<double>>& rows, int nx,
                                       int ny);

// The k-use channel. Either the memoryless k-fold extension of a base
// channel, or an explicit per-word table for one fixed k; the latter keeps
// channels that are not memoryless testable at tiny block lengths.
class BlockChannel {
 public:
  static BlockChannel memoryless(CcqChannel base, int k, int dim_cap = kDefaultDimCap);
  /// table indexed rank(xk) * ny^k + rank(yk), mixed-radix word ranks;
  /// must be complete.
  static BlockChannel explicit_table(int nx, int ny, int k, std::vector<DensityOperator> table);

  int k() const { return k_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int block_dim() const { return block_dim_; }
  bool is_memoryless() const { return base_.has_value(); }
  const CcqChannel& base() const;

  /// W^k(x^k, y^k): tensor of per-letter outputs in the memoryless form,
  /// table lookup in the explicit form.
  DensityOperator evaluate(const Word& xk, const Word& yk) const;

 private:
  BlockChannel() = default;
  int k_ = 0;
  int nx_ = 0;
  int ny_ = 0;
  int block_dim_ = 0;
  std::optional<CcqChannel> base_;
  std::vector<DensityOperator> table_;
};

}  // namespace ccq
