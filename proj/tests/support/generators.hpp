// Copyright 2026 The clp2chc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Random programs and scripts for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "clp2chc/smtlib.hpp"
#include "clp2chc/syntax.hpp"

namespace testgen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }
  template <typename T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 engine_;
};

struct ProgramShape {
  std::size_t max_clauses = 6;
  std::size_t max_depth = 3;
  std::size_t max_body = 4;
  bool lists = true;
  bool integers = true;
  bool quoted_atoms = true;
  bool negation = true;
  bool queries = true;
};

/// A program whose clauses satisfy the Clause invariants. Names are drawn
/// from small pools so that collisions across arities and namespaces occur.
clp2chc::syntax::Database random_program(Rng& rng, const ProgramShape& shape = {});

clp2chc::syntax::Term random_term(Rng& rng, std::size_t depth, const ProgramShape& shape,
                                  const std::vector<std::string>& vars);

/// A Script satisfying the Script invariants, with names that need quoting.
clp2chc::smt::Script random_script(Rng& rng);

}  // namespace testgen
