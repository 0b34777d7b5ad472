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

// Bounded bottom-up evaluation of a program over its Herbrand universe.
//
// Ground terms are restricted to a finite universe: terms of depth at most
// `term_depth`, integers inside `int_range`, and lists of at most
// `max_list_len` elements. Facts are derived semi-naively until no new fact
// appears (saturation) or `max_iterations` rounds have run. Every derived
// fact is a logical consequence of the program; the converse only holds
// inside the bounds.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clp2chc/signatures.hpp"
#include "clp2chc/syntax.hpp"

namespace clp2chc::oracle {

struct Bounds {
  std::size_t term_depth = 3;
  Integer int_min = 0;
  Integer int_max = 16;
  std::size_t max_list_len = 4;
  std::size_t max_iterations = 100;
  /// Largest universe the evaluator is willing to materialize.
  std::size_t universe_cap = 1'000'000;
  /// Put integers and lists into the universe even if the program has none.
  bool force_features = false;
};

class UniverseTooLarge : public Error {
 public:
  using Error::Error;
};

using TermId = std::uint32_t;

/// Hash-consed ground terms: structurally equal terms share one id.
class TermStore {
 public:
  enum class Kind { kAtom, kInt, kCompound, kList };

  explicit TermStore(Bounds bounds) : bounds_(std::move(bounds)) {}

  TermId atom(const std::string& name);
  TermId integer(const Integer& value);
  TermId compound(const std::string& name, std::vector<TermId> args);
  TermId list(std::vector<TermId> elements);
  TermId from_term(const syntax::Term& t);  // t must be ground, without arithmetic

  Kind kind(TermId id) const { return nodes_[id].kind; }
  const std::string& name(TermId id) const { return names_[nodes_[id].name]; }
  const Integer& value(TermId id) const { return ints_[nodes_[id].name]; }
  /// Arguments of a compound or elements of a list.
  const std::vector<TermId>& children(TermId id) const { return nodes_[id].children; }
  std::size_t depth(TermId id) const { return nodes_[id].depth; }
  /// Depth, integer range and list length all within the bounds.
  bool in_bounds(TermId id) const { return nodes_[id].in_bounds; }

  syntax::Term to_term(TermId id) const;
  std::string to_string(TermId id) const;
  std::size_t size() const { return nodes_.size(); }
  const Bounds& bounds() const { return bounds_; }

 private:
  struct Node {
    Kind kind;
    std::uint32_t name;  // index into names_ (atoms, compounds) or ints_
    std::vector<TermId> children;
    std::size_t depth;
    bool in_bounds;
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const;
  };

  TermId intern(Kind kind, std::uint32_t name, std::vector<TermId> children);
  std::uint32_t name_id(const std::string& name);

  Bounds bounds_;
  std::vector<Node> nodes_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> name_ids_;
  std::vector<Integer> ints_;
  std::map<Integer, std::uint32_t> int_ids_;
  std::unordered_map<std::vector<std::uint32_t>, TermId, KeyHash> index_;
};

/// All ground terms within the bounds built from the signature, in order of
/// increasing depth. Throws UniverseTooLarge above bounds.universe_cap.
std::vector<syntax::Term> enumerate_universe(const std::vector<FunctionSig>& funcs,
                                             const FeatureSet& feats, const Bounds& b);

/// Derived ground facts, grouped per predicate, plus the facts that were new
/// in each round.
class GroundFactSet {
 public:
  struct Relation {
    std::string name;
    std::size_t arity;
    std::vector<std::vector<TermId>> tuples;  // append-only
  };

  bool contains(const std::string& predicate, const std::vector<syntax::Term>& args) const;
  /// Facts of one predicate as terms, in derivation order.
  std::vector<std::vector<syntax::Term>> facts(const std::string& predicate,
                                               std::size_t arity) const;
  /// Every fact printed as Prolog, sorted.
  std::vector<std::string> to_strings() const;
  std::size_t size() const;

  /// Number of new facts per round; round 0 holds facts and body-less
  /// instances.
  const std::vector<std::size_t>& delta_sizes() const { return delta_sizes_; }
  /// Facts first derived in the given round, printed as Prolog.
  std::vector<std::string> delta(std::size_t round) const;
  /// The last round derived nothing new.
  bool saturated() const { return saturated_; }
  /// Some instance was cut off by the bounds, so non-derivability inside the
  /// bounds says nothing about the unbounded program.
  bool truncated() const { return truncated_; }

  const TermStore& store() const { return *store_; }
  const std::vector<Relation>& relations() const { return relations_; }

 private:
  friend class Evaluator;
  struct TupleHash {
    std::size_t operator()(const std::vector<TermId>& t) const;
  };

  std::shared_ptr<TermStore> store_;
  std::vector<Relation> relations_;
  std::map<std::pair<std::string, std::size_t>, std::size_t> relation_index_;
  std::vector<std::unordered_map<std::vector<TermId>, std::size_t, TupleHash>> members_;
  // Per round, the (relation, first tuple) boundaries of the round's delta.
  std::vector<std::vector<std::size_t>> round_starts_;
  std::vector<std::size_t> delta_sizes_;
  bool saturated_ = false;
  bool truncated_ = false;
};

struct QueryAnswer {
  bool derivable = false;
  /// Values of the query's variables in the first solution found.
  std::vector<std::pair<std::string, syntax::Term>> witness;
  bool saturated = false;
  /// Saturated and never cut off by the bounds: a negative answer is then
  /// definitive for the unbounded program.
  bool exhaustive = false;
};

/// Least fixpoint of the non-query clauses of db.
GroundFactSet fixpoint(const syntax::Database& db, const Bounds& b);

/// Whether some instance of the query's body holds in the fixpoint of the
/// non-query clauses of db.
QueryAnswer query_holds(const syntax::Database& db, const syntax::Clause& query, const Bounds& b);

/// Same, for every query of the program: derivable when any query is.
QueryAnswer program_query_holds(const syntax::Database& db, const Bounds& b);

}  // namespace clp2chc::oracle
