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

#include "doctest.h"

#include "ccq/errors.hpp"
#include "ccq/rng.hpp"
#include "ccq/spectral.hpp"
#include "support/generators.hpp"

using namespace ccq;

TEST_CASE("word string round trip") {
  CHECK(word_to_string({0, 1, 2}) == "0,1,2");
  CHECK(word_from_string("0,1,2") == Word{0, 1, 2});
  CHECK(word_from_string("7") == Word{7});
  CHECK_THROWS_AS(word_from_string(""), ParameterError);
  CHECK_THROWS_AS(word_from_string("1,,2"), ParameterError);
  CHECK_THROWS_AS(word_from_string("a,b"), ParameterError);
}

TEST_CASE("depolarizing p=0 embeds words as orthogonal pure states") {
  const CcqChannel ch = depolarizing_channel(0.0, 2, 2);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      CHECK(max_abs_diff(ch.state(x, y).matrix(), ComplexMatrix::basis_projector(4, 2 * x + y)) ==
            0.0);
    }
  }
}

TEST_CASE("depolarizing p=1 outputs the maximally mixed state") {
  const CcqChannel ch = depolarizing_channel(1.0, 2, 2);
  ComplexMatrix mixed = ComplexMatrix::identity(4);
  mixed *= Complex(0.25, 0.0);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      CHECK(max_abs_diff(ch.state(x, y).matrix(), mixed) <= 1e-15);
    }
  }
}

TEST_CASE("depolarizing p=0.2 keeps 0.85 overlap with the input projector") {
  const CcqChannel ch = depolarizing_channel(0.2, 2, 2);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double overlap = real_inner_trace(ComplexMatrix::basis_projector(4, 2 * x + y),
                                              ch.state(x, y).matrix());
      CHECK(overlap == doctest::Approx(0.85).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(depolarizing_channel(-0.1, 2, 2), ParameterError);
  CHECK_THROWS_AS(depolarizing_channel(1.1, 2, 2), ParameterError);
}

TEST_CASE("classical adder embeds deterministically") {
  // z = x + y over binary inputs, |Z| = 3.
  std::vector<std::vector<double>> rows(4, std::vector<double>(3, 0.0));
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      rows[x * 2 + y][x + y] = 1.0;
    }
  }
  const CcqChannel ch = classical_channel_embedding(rows, 2, 2);
  CHECK(max_abs_diff(ch.state(1, 1).matrix(), ComplexMatrix::basis_projector(3, 2)) == 0.0);
  CHECK(max_abs_diff(ch.state(0, 1).matrix(), ComplexMatrix::basis_projector(3, 1)) == 0.0);
}

TEST_CASE("uniform classical rows embed as the mixed state") {
  const std::vector<std::vector<double>> rows(4, std::vector<double>(4, 0.25));
  const CcqChannel ch = classical_channel_embedding(rows, 2, 2);
  ComplexMatrix mixed = ComplexMatrix::identity(4);
  mixed *= Complex(0.25, 0.0);
  CHECK(max_abs_diff(ch.state(0, 0).matrix(), mixed) == 0.0);
}

TEST_CASE("classical rows become the diagonal") {
  const std::vector<std::vector<double>> rows = {
      {0.9, 0.1}, {0.1, 0.9}, {0.5, 0.5}, {0.3, 0.7}};
  const CcqChannel ch = classical_channel_embedding(rows, 2, 2);
  CHECK(ch.state(0, 0).matrix()(0, 0) == Complex(0.9, 0.0));
  CHECK(ch.state(1, 1).matrix()(1, 1) == Complex(0.7, 0.0));
  CHECK(ch.state(1, 0).matrix()(0, 1) == Complex(0.0, 0.0));
}

TEST_CASE("non-stochastic rows are an input error") {
  CHECK_THROWS_AS(classical_channel_embedding({{0.5, 0.6}, {1, 0}, {1, 0}, {1, 0}}, 2, 2),
                  ParameterError);
  CHECK_THROWS_AS(classical_channel_embedding({{0.5, -0.5}, {1, 0}, {1, 0}, {1, 0}}, 2, 2),
                  ParameterError);
}

TEST_CASE("classical embeddings commute pairwise") {
  Rng rng(31);
  const CcqChannel ch =
      classical_channel_embedding(testing::random_stochastic_rows(4, 3, rng), 2, 2);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const ComplexMatrix& a = ch.state(i / 2, i % 2).matrix();
      const ComplexMatrix& b = ch.state(j / 2, j % 2).matrix();
      CHECK(max_abs_diff(a * b, b * a) == 0.0);
    }
  }
}

TEST_CASE("noiseless block output is the tensor basis state") {
  const BlockChannel ch = BlockChannel::memoryless(depolarizing_channel(0.0, 2, 2), 2);
  const DensityOperator out = ch.evaluate({0, 1}, {1, 0});
  // Letters map to basis indices 2*0+1 = 1 and 2*1+0 = 2; tensor index 1*4+2.
  CHECK(out.dim() == 16);
  CHECK(max_abs_diff(out.matrix(), ComplexMatrix::basis_projector(16, 6)) == 0.0);
}

TEST_CASE("k=1 block evaluation is the base table lookup") {
  const CcqChannel base = depolarizing_channel(0.3, 2, 2);
  const BlockChannel ch = BlockChannel::memoryless(base, 1);
  CHECK(max_abs_diff(ch.evaluate({1}, {0}).matrix(), base.state(1, 0).matrix()) == 0.0);
}

TEST_CASE("depolarizing block outputs have unit trace") {
  const BlockChannel ch = BlockChannel::memoryless(depolarizing_channel(0.2, 2, 2), 2);
  for (const Word& xw : enumerate_words(Alphabet{2}, 2)) {
    for (const Word& yw : enumerate_words(Alphabet{2}, 2)) {
      // Tensor-trace oracle: the trace of a tensor product is the product of
      // traces, each exactly 1.
      CHECK(std::abs(ch.evaluate(xw, yw).matrix().trace() - Complex(1.0, 0.0)) <= 1e-12);
    }
  }
}

TEST_CASE("block evaluation rejects malformed words") {
  const BlockChannel ch = BlockChannel::memoryless(depolarizing_channel(0.2, 2, 2), 2);
  CHECK_THROWS_AS(ch.evaluate({0, 2}, {0, 0}), ParameterError);
  CHECK_THROWS_AS(ch.evaluate({0}, {0, 0}), ParameterError);
  CHECK_THROWS_AS(ch.evaluate({0, 0}, {0, -1}), ParameterError);
}

TEST_CASE("dimension cap blocks oversized tensor powers") {
  CHECK_THROWS_AS(BlockChannel::memoryless(depolarizing_channel(0.2, 2, 2), 7),
                  DimensionLimitError);
  CHECK_NOTHROW(BlockChannel::memoryless(depolarizing_channel(0.2, 2, 2), 6));
}

TEST_CASE("block outputs are valid density operators across random channels") {
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const int kind = trial % 3;
    const int k = 1 + trial % 3;
    CcqChannel base = [&]() -> CcqChannel {
      if (kind == 0) {
        return depolarizing_channel(rng.uniform01(), 2, 2);
      }
      if (kind == 1) {
        return classical_channel_embedding(testing::random_stochastic_rows(4, 3, rng), 2, 2);
      }
      return testing::random_table_channel(2, 2, 2 + (int)rng.below(3), rng);
    }();
    const BlockChannel ch = BlockChannel::memoryless(std::move(base), k);
    const std::vector<Word> xs = enumerate_words(Alphabet{2}, k);
    const std::vector<Word> ys = enumerate_words(Alphabet{2}, k);
    const Word& xw = xs[rng.below(xs.size())];
    const Word& yw = ys[rng.below(ys.size())];
    CHECK(validate_density(ch.evaluate(xw, yw).matrix()).pass);
  }
}

TEST_CASE("memoryless evaluation factors over split words") {
  Rng rng(33);
  const CcqChannel base = testing::random_table_channel(2, 2, 3, rng);
  const BlockChannel whole = BlockChannel::memoryless(base, 3);
  const BlockChannel left = BlockChannel::memoryless(base, 2);
  const BlockChannel right = BlockChannel::memoryless(base, 1);
  const Word xw = {0, 1, 1};
  const Word yw = {1, 0, 1};
  const ComplexMatrix split = kron(left.evaluate({0, 1}, {1, 0}).matrix(),
                                   right.evaluate({1}, {1}).matrix());
  CHECK(max_abs_diff(whole.evaluate(xw, yw).matrix(), split) <= 1e-10);
}

TEST_CASE("explicit block tables cover channels that are not memoryless") {
  const CcqChannel base = depolarizing_channel(0.1, 2, 2);
  const BlockChannel memoryless = BlockChannel::memoryless(base, 1);

  // Tabulate k=1 then retarget one entry; the result is a legitimate block
  // channel that no memoryless extension reproduces.
  std::vector<DensityOperator> table;
  for (const Word& xw : enumerate_words(Alphabet{2}, 1)) {
    for (const Word& yw : enumerate_words(Alphabet{2}, 1)) {
      table.push_back(memoryless.evaluate(xw, yw));
    }
  }
  table[3] = DensityOperator::from_valid(ComplexMatrix::basis_projector(4, 0));
  const BlockChannel explicit_ch = BlockChannel::explicit_table(2, 2, 1, table);

  CHECK(!explicit_ch.is_memoryless());
  CHECK(max_abs_diff(explicit_ch.evaluate({0}, {1}).matrix(),
                     memoryless.evaluate({0}, {1}).matrix()) == 0.0);
  CHECK(max_abs_diff(explicit_ch.evaluate({1}, {1}).matrix(),
                     ComplexMatrix::basis_projector(4, 0)) == 0.0);
  CHECK_THROWS_AS(explicit_ch.base(), ParameterError);

  table.pop_back();
  CHECK_THROWS_AS(BlockChannel::explicit_table(2, 2, 1, table), ParameterError);
}
