// Copyright 2026 The Postulatum Authors.
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

// Dependency graphs of proofs and constructions, and the rules that decide
// whether a construction is licensed.
//
// Graph files (.kg) are line oriented:
//
//   node <id> kind=<postulate|definition|proposition|construction|axiom>
//        [asserts-existence-of=<property>]
//   property <id> <finite|infinite>
//   uses <node> <node>
//   implies <property> <property> by=<node>
//   builds <construction> target=<property> via=<property>
//   note <free text>
//
// `#` starts a comment. The order of `node` lines is the declaration order;
// other records may appear anywhere and may name nodes declared later.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace postulatum::kgraph {

enum class NodeKind { kPostulate, kDefinition, kProposition, kConstruction, kAxiom };
enum class Finiteness { kFinite, kInfinite };

std::string_view to_string(NodeKind kind);
std::string_view to_string(Finiteness f);

struct Node {
  std::string id;
  NodeKind kind = NodeKind::kProposition;
  std::optional<std::string> asserts_existence_of;
};

struct PropertyRecord {
  std::string id;
  Finiteness finiteness = Finiteness::kFinite;
};

struct UsesEdge {
  std::string from;
  std::string to;
};

struct ImplicationRecord {
  std::string from;
  std::string to;
  std::string proved_by;
};

struct BuildRecord {
  std::string construction;
  std::string target;
  std::string via;
};

class DepGraph {
 public:
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<PropertyRecord>& properties() const { return properties_; }
  const std::vector<UsesEdge>& uses() const { return uses_; }
  const std::vector<ImplicationRecord>& implications() const { return implications_; }
  const std::vector<BuildRecord>& builds() const { return builds_; }
  const std::vector<std::string>& notes() const { return notes_; }

  const Node* find_node(std::string_view id) const;
  const PropertyRecord* find_property(std::string_view id) const;
  // Declaration index of a node; throws std::out_of_range if absent.
  std::size_t position(std::string_view id) const;
  // Direct uses-successors in file order.
  std::vector<std::string> uses_of(std::string_view id) const;

 private:
  friend DepGraph parse_graph(std::string_view text);

  std::vector<Node> nodes_;
  std::vector<PropertyRecord> properties_;
  std::vector<UsesEdge> uses_;
  std::vector<ImplicationRecord> implications_;
  std::vector<BuildRecord> builds_;
  std::vector<std::string> notes_;
  std::map<std::string, std::size_t, std::less<>> node_index_;
  std::map<std::string, std::size_t, std::less<>> property_index_;
};

// Throws GeometryError(ParseError) with "line N: reason" for unknown
// directives, malformed fields, duplicate ids and references to nodes or
// properties that are never declared.
DepGraph parse_graph(std::string_view text);

enum class Rule { kK2Order, kK2Existence, kK3, kDirectInfinite };
std::string_view to_string(Rule rule);

struct Violation {
  Rule rule;
  std::string node;
  std::string message;
  bool operator==(const Violation&) const = default;
};

// K2-order: a node uses one declared after it. K2-existence: a
// construction's transitive uses-closure reaches a node asserting the
// existence of the property it builds.
std::vector<Violation> check_k2(const DepGraph& g);

enum class LicenseStatus { kLicensed, kK3, kDirect, kDirectInfinite };

struct LicenseRow {
  BuildRecord build;
  LicenseStatus status = LicenseStatus::kDirect;
  // Proof nodes of via->target and target->via, when available in time.
  std::optional<std::string> forward_by;
  std::optional<std::string> converse_by;
  // Postulates and axioms the licensing proofs rest on, in declaration
  // order.
  std::vector<std::string> rests_on;
};

struct LicenseReport {
  std::vector<Violation> violations;
  std::vector<LicenseRow> rows;
};

// An indirect build (via != target) is licensed iff both implications are
// proved by nodes declared before the construction; otherwise it is a K3
// violation. A direct build of an infinite property is direct-infinite.
LicenseReport check_licensing(const DepGraph& g);

// Property ids no node, implication or build refers to.
std::vector<std::string> unused_properties(const DepGraph& g);

struct Analysis {
  std::vector<Violation> violations;  // declaration order of their nodes
  std::vector<LicenseRow> rows;
};

Analysis analyze(const DepGraph& g);

// Byte-stable report: `violations: N`, one line per violation, then
// `licenses: M` and one line per build record.
std::string format_analysis(const Analysis& a);

}  // namespace postulatum::kgraph
