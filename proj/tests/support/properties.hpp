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

// Property checks shared by the unit tests and the acceptance runner. Each
// returns the first counterexample it finds.

#include <cstdint>
#include <string>
#include <vector>

#include "clp2chc/syntax.hpp"

namespace props {

struct Outcome {
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;  // counterexample when !ok
};

/// parse_program(print_program(db)) == db.
Outcome parse_roundtrip(std::size_t n, std::uint64_t seed);

/// parse_script(emit(s, style)) == s in both styles.
Outcome emit_parse_inverse(std::size_t n, std::uint64_t seed);

/// Reflexivity, symmetry and transitivity of structurally_equal over
/// alpha-renamed, restyled and perturbed variants of generated scripts.
Outcome structural_equivalence(std::size_t n, std::uint64_t seed);

/// check_sorts and check_horn_shape are clean for every program.
Outcome translation_well_formed(const std::vector<clp2chc::syntax::Database>& programs);

/// Same on generated programs (those without negated calls).
Outcome generated_translation_well_formed(std::size_t n, std::uint64_t seed);

/// `\+` over a user predicate raises NegatedPredicateError.
Outcome negated_predicate_rejected();

/// Global symbols of a NameTable are pairwise distinct, for colliding names.
Outcome mangle_distinct(std::size_t n, std::uint64_t seed);

/// detect_features(db).uses_lists == (print_program(db) contains '[').
Outcome lists_feature(std::size_t n, std::uint64_t seed);

/// No emitted line exceeds 120 characters outside quoted symbols.
Outcome emit_line_width(std::size_t n, std::uint64_t seed);

/// Library fixpoint equals the naive reference on tiny generated programs;
/// `cases` counts the programs small enough to compare.
Outcome oracle_matches_reference(std::size_t n, std::uint64_t seed);

/// Enlarging bounds never loses facts; repeated runs are identical.
Outcome oracle_monotone_deterministic(std::size_t n, std::uint64_t seed);

/// Tiny programs for the reference comparison.
clp2chc::syntax::Database tiny_program(std::uint64_t seed, bool lists, bool integers);

}  // namespace props
