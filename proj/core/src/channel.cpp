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

#include "ccq/channel.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ccq/errors.hpp"

namespace ccq {

namespace {

// size^k with the dimension-cap guard; cap < 0 disables the guard.
long long checked_pow(int base, int k, long long cap, const char* what) {
  long long v = 1;
  for (int i = 0; i < k; ++i) {
    v *= base;
    if (cap >= 0 && v > cap) {
      throw DimensionLimitError(std::string(what) + " " + std::to_string(base) + "^" +
                                std::to_string(k) + " exceeds cap " + std::to_string(cap));
    }
  }
  return v;
}

void check_word(const Word& w, int k, int alphabet_size, const char* sender) {
  if (static_cast<int>(w.size()) != k) {
    throw ParameterError(std::string(sender) + " word length " + std::to_string(w.size()) +
                         " does not match block length " + std::to_string(k));
  }
  for (int letter : w) {
    if (letter < 0 || letter >= alphabet_size) {
      throw ParameterError(std::string(sender) + " letter " + std::to_string(letter) +
                           " out of range [0, " + std::to_string(alphabet_size) + ")");
    }
  }
}

long long word_rank(const Word& w, int alphabet_size) {
  long long r = 0;
  for (int letter : w) {
    r = r * alphabet_size + letter;
  }
  return r;
}

}  // namespace

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      s += ',';
    }
    s += std::to_string(w[i]);
  }
  return s;
}

Word word_from_string(const std::string& s) {
  Word w;
  if (s.empty()) {
    throw ParameterError("empty word string");
  }
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find(',', pos);
    const std::string token = s.substr(pos, next == std::string::npos ? next : next - pos);
    if (token.empty()) {
      throw ParameterError("malformed word string '" + s + "'");
    }
    try {
      std::size_t used = 0;
      const int letter = std::stoi(token, &used);
      if (used != token.size() || letter < 0) {
        throw ParameterError("malformed letter '" + token + "' in word '" + s + "'");
      }
      w.push_back(letter);
    } catch (const std::invalid_argument&) {
      throw ParameterError("malformed letter '" + token + "' in word '" + s + "'");
    } catch (const std::out_of_range&) {
      throw ParameterError("letter out of range in word '" + s + "'");
    }
    if (next == std::string::npos) {
      break;
    }
    pos = next + 1;
  }
  return w;
}

std::vector<Word> enumerate_words(Alphabet alphabet, int k) {
  if (alphabet.size < 1 || k < 1) {
    throw ParameterError("enumerate_words needs alphabet size >= 1 and k >= 1");
  }
  const long long total = checked_pow(alphabet.size, k, 1 << 22, "word count");
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(total));
  Word w(static_cast<std::size_t>(k), 0);
  for (long long i = 0; i < total; ++i) {
    words.push_back(w);
    for (int pos = k - 1; pos >= 0; --pos) {
      if (++w[pos] < alphabet.size) {
        break;
      }
      w[pos] = 0;
    }
  }
  return words;
}

CcqChannel::CcqChannel(int nx, int ny, int dim, std::vector<DensityOperator> states)
    : nx_(nx), ny_(ny), dim_(dim), states_(std::move(states)) {
  if (nx_ < 1 || ny_ < 1 || dim_ < 1) {
    throw ParameterError("channel needs nx, ny, dim >= 1");
  }
  if (states_.size() != static_cast<std::size_t>(nx_) * ny_) {
    throw ParameterError("channel table must hold one state per input pair: expected " +
                         std::to_string(nx_ * ny_) + ", got " + std::to_string(states_.size()));
  }
  for (const DensityOperator& s : states_) {
    if (s.dim() != dim_) {
      throw ParameterError("channel state dimension mismatch");
    }
  }
}

const DensityOperator& CcqChannel::state(int x, int y) const {
  if (x < 0 || x >= nx_ || y < 0 || y >= ny_) {
    throw ParameterError("channel input (" + std::to_string(x) + ", " + std::to_string(y) +
                         ") out of range");
  }
  return states_[static_cast<std::size_t>(x) * ny_ + y];
}

CcqChannel depolarizing_channel(double p, int nx, int ny) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("depolarizing p must lie in [0, 1], got " + std::to_string(p));
  }
  if (nx < 1 || ny < 1) {
    throw ParameterError("depolarizing_channel needs nx, ny >= 1");
  }
  const int dim = nx * ny;
  std::vector<DensityOperator> states;
  states.reserve(static_cast<std::size_t>(dim));
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      ComplexMatrix m = ComplexMatrix::basis_projector(dim, x * ny + y);
      m *= Complex(1.0 - p, 0.0);
      for (int i = 0; i < dim; ++i) {
        m(i, i) += Complex(p / dim, 0.0);
      }
      states.push_back(DensityOperator::from_valid(std::move(m)));
    }
  }
  return CcqChannel(nx, ny, dim, std::move(states));
}

CcqChannel classical_channel_embedding(const std::vector<std::vector<double>>& rows, int nx,
                                       int ny) {
  if (rows.size() != static_cast<std::size_t>(nx) * ny || rows.empty()) {
    throw ParameterError("classical embedding needs one row per input pair");
  }
  const std::size_t dim = rows.front().size();
  if (dim == 0) {
    throw ParameterError("classical embedding rows must be non-empty");
  }
  std::vector<DensityOperator> states;
  states.reserve(rows.size());
  for (const std::vector<double>& row : rows) {
    if (row.size() != dim) {
      throw ParameterError("classical embedding rows must share one length");
    }
    double sum = 0.0;
    for (double v : row) {
      if (v < 0.0) {
        throw ParameterError("classical embedding row has a negative probability");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw ParameterError("classical embedding row sums to " + std::to_string(sum) +
                           ", not 1 within 1e-12");
    }
    states.push_back(DensityOperator::from_valid(ComplexMatrix::diagonal(row)));
  }
  return CcqChannel(nx, ny, static_cast<int>(dim), std::move(states));
}

BlockChannel BlockChannel::memoryless(CcqChannel base, int k, int dim_cap) {
  if (k < 1) {
    throw ParameterError("block length k must be >= 1");
  }
  const long long block_dim = checked_pow(base.dim(), k, dim_cap, "block dimension");
  BlockChannel ch;
  ch.k_ = k;
  ch.nx_ = base.nx();
  ch.ny_ = base.ny();
  ch.block_dim_ = static_cast<int>(block_dim);
  ch.base_ = std::move(base);
  return ch;
}

BlockChannel BlockChannel::explicit_table(int nx, int ny, int k,
                                          std::vector<DensityOperator> table) {
  if (k < 1 || nx < 1 || ny < 1) {
    throw ParameterError("explicit block channel needs nx, ny, k >= 1");
  }
  const long long words_x = checked_pow(nx, k, 1 << 20, "x word count");
  const long long words_y = checked_pow(ny, k, 1 << 20, "y word count");
  if (table.size() != static_cast<std::size_t>(words_x * words_y) || table.empty()) {
    throw ParameterError("explicit block table must be complete: expected " +
                         std::to_string(words_x * words_y) + " states, got " +
                         std::to_string(table.size()));
  }
  const int dim = table.front().dim();
  for (const DensityOperator& s : table) {
    if (s.dim() != dim) {
      throw ParameterError("explicit block table states must share one dimension");
    }
  }
  BlockChannel ch;
  ch.k_ = k;
  ch.nx_ = nx;
  ch.ny_ = ny;
  ch.block_dim_ = dim;
  ch.table_ = std::move(table);
  return ch;
}

const CcqChannel& BlockChannel::base() const {
  if (!base_.has_value()) {
    throw ParameterError("explicit block channel has no base channel");
  }
  return *base_;
}

DensityOperator BlockChannel::evaluate(const Word& xk, const Word& yk) const {
  check_word(xk, k_, nx_, "x");
  check_word(yk, k_, ny_, "y");
  if (base_.has_value()) {
    ComplexMatrix out = base_->state(xk[0], yk[0]).matrix();
    for (int i = 1; i < k_; ++i) {
      out = kron(out, base_->state(xk[i], yk[i]).matrix(), block_dim_);
    }
    return DensityOperator::from_valid(std::move(out));
  }
  const long long yk_count = checked_pow(ny_, k_, -1, "");
  const long long index = word_rank(xk, nx_) * yk_count + word_rank(yk, ny_);
  return table_[static_cast<std::size_t>(index)];
}

}  // namespace ccq
