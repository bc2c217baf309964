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

#include "postulatum/k_checker.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "postulatum/error.hpp"

namespace postulatum::kgraph {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& reason) {
  throw GeometryError(ErrorKind::kParseError, "line " + std::to_string(line_no) + ": " + reason);
}

// Value of `key=value`, or nullopt if the word has another key.
std::optional<std::string> field(std::string_view word, std::string_view key) {
  if (word.size() <= key.size() || word.substr(0, key.size()) != key ||
      word[key.size()] != '=') {
    return std::nullopt;
  }
  return std::string(word.substr(key.size() + 1));
}

std::string required_field(std::string_view word, std::string_view key, std::size_t line_no) {
  std::optional<std::string> v = field(word, key);
  if (!v) parse_fail(line_no, "expected " + std::string(key) + "=<id>, got '" + std::string(word) + "'");
  return *v;
}

std::optional<NodeKind> parse_kind(std::string_view s) {
  for (NodeKind k : {NodeKind::kPostulate, NodeKind::kDefinition, NodeKind::kProposition,
                     NodeKind::kConstruction, NodeKind::kAxiom}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

enum class RefKind { kNode, kProperty, kConstruction };

struct PendingRef {
  std::size_t line;
  RefKind kind;
  std::string id;
};

}  // namespace

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::kPostulate: return "postulate";
    case NodeKind::kDefinition: return "definition";
    case NodeKind::kProposition: return "proposition";
    case NodeKind::kConstruction: return "construction";
    case NodeKind::kAxiom: return "axiom";
  }
  return "unknown";
}

std::string_view to_string(Finiteness f) {
  return f == Finiteness::kFinite ? "finite" : "infinite";
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::kK2Order: return "K2-order";
    case Rule::kK2Existence: return "K2-existence";
    case Rule::kK3: return "K3";
    case Rule::kDirectInfinite: return "direct-infinite";
  }
  return "unknown";
}

const Node* DepGraph::find_node(std::string_view id) const {
  const auto it = node_index_.find(id);
  return it == node_index_.end() ? nullptr : &nodes_[it->second];
}

const PropertyRecord* DepGraph::find_property(std::string_view id) const {
  const auto it = property_index_.find(id);
  return it == property_index_.end() ? nullptr : &properties_[it->second];
}

std::size_t DepGraph::position(std::string_view id) const {
  const auto it = node_index_.find(id);
  if (it == node_index_.end()) throw std::out_of_range("no node " + std::string(id));
  return it->second;
}

std::vector<std::string> DepGraph::uses_of(std::string_view id) const {
  std::vector<std::string> out;
  for (const UsesEdge& e : uses_) {
    if (e.from == id) out.push_back(e.to);
  }
  return out;
}

DepGraph parse_graph(std::string_view text) {
  DepGraph g;
  std::vector<PendingRef> refs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto w = split_words(line);
    if (w.empty()) continue;
    const std::string_view directive = w[0];

    if (directive == "note") {
      // Prose only; the rules never read it.
      const std::size_t start = line.find_first_not_of(" \t", line.find("note") + 4);
      std::string_view body = start == std::string_view::npos ? "" : line.substr(start);
      while (!body.empty() && (body.back() == ' ' || body.back() == '\t' || body.back() == '\r')) {
        body.remove_suffix(1);
      }
      g.notes_.emplace_back(body);
      continue;
    }
    if (directive == "node") {
      if (w.size() < 3 || w.size() > 4) {
        parse_fail(line_no, "node takes an id, kind= and optionally asserts-existence-of=");
      }
      Node n;
      n.id = std::string(w[1]);
      const std::string kind = required_field(w[2], "kind", line_no);
      const std::optional<NodeKind> k = parse_kind(kind);
      if (!k) parse_fail(line_no, "unknown node kind '" + kind + "'");
      n.kind = *k;
      if (w.size() == 4) {
        n.asserts_existence_of = required_field(w[3], "asserts-existence-of", line_no);
        if (n.kind != NodeKind::kAxiom && n.kind != NodeKind::kPostulate) {
          parse_fail(line_no, "only axioms and postulates may assert existence");
        }
        refs.push_back({line_no, RefKind::kProperty, *n.asserts_existence_of});
      }
      if (g.node_index_.count(n.id) != 0) parse_fail(line_no, "duplicate node '" + n.id + "'");
      g.node_index_.emplace(n.id, g.nodes_.size());
      g.nodes_.push_back(std::move(n));
    } else if (directive == "property") {
      if (w.size() != 3) parse_fail(line_no, "property takes an id and finite|infinite");
      PropertyRecord p;
      p.id = std::string(w[1]);
      if (w[2] == "finite") {
        p.finiteness = Finiteness::kFinite;
      } else if (w[2] == "infinite") {
        p.finiteness = Finiteness::kInfinite;
      } else {
        parse_fail(line_no, "finiteness must be finite or infinite, got '" + std::string(w[2]) + "'");
      }
      if (g.property_index_.count(p.id) != 0) {
        parse_fail(line_no, "duplicate property '" + p.id + "'");
      }
      g.property_index_.emplace(p.id, g.properties_.size());
      g.properties_.push_back(std::move(p));
    } else if (directive == "uses") {
      if (w.size() != 3) parse_fail(line_no, "uses takes two node ids");
      if (w[1] == w[2]) parse_fail(line_no, "node '" + std::string(w[1]) + "' uses itself");
      g.uses_.push_back({std::string(w[1]), std::string(w[2])});
      refs.push_back({line_no, RefKind::kNode, std::string(w[1])});
      refs.push_back({line_no, RefKind::kNode, std::string(w[2])});
    } else if (directive == "implies") {
      if (w.size() != 4) parse_fail(line_no, "implies takes two property ids and by=<node>");
      ImplicationRecord r{std::string(w[1]), std::string(w[2]), required_field(w[3], "by", line_no)};
      if (r.from == r.to) parse_fail(line_no, "an implication needs two distinct properties");
      refs.push_back({line_no, RefKind::kProperty, r.from});
      refs.push_back({line_no, RefKind::kProperty, r.to});
      refs.push_back({line_no, RefKind::kNode, r.proved_by});
      g.implications_.push_back(std::move(r));
    } else if (directive == "builds") {
      if (w.size() != 4) parse_fail(line_no, "builds takes a node id, target= and via=");
      BuildRecord b{std::string(w[1]), required_field(w[2], "target", line_no),
                    required_field(w[3], "via", line_no)};
      refs.push_back({line_no, RefKind::kConstruction, b.construction});
      refs.push_back({line_no, RefKind::kProperty, b.target});
      refs.push_back({line_no, RefKind::kProperty, b.via});
      g.builds_.push_back(std::move(b));
    } else {
      parse_fail(line_no, "unknown directive '" + std::string(directive) + "'");
    }
  }

  // References may point forward in the file, so resolve them at the end.
  for (const PendingRef& r : refs) {
    if (r.kind == RefKind::kProperty) {
      if (!g.find_property(r.id)) parse_fail(r.line, "undeclared property '" + r.id + "'");
      continue;
    }
    const Node* n = g.find_node(r.id);
    if (!n) parse_fail(r.line, "undeclared node '" + r.id + "'");
    if (r.kind == RefKind::kConstruction && n->kind != NodeKind::kConstruction) {
      parse_fail(r.line, "'" + r.id + "' builds but is a " + std::string(to_string(n->kind)));
    }
  }
  return g;
}

namespace {

// Shortest uses-path from `from` to a node satisfying `goal`, neighbors
// taken in file order so the result is deterministic.
template <class Goal>
std::optional<std::vector<std::string>> find_path(const DepGraph& g, const std::string& from,
                                                  Goal goal) {
  std::map<std::string, std::string> parent;
  std::set<std::string> seen{from};
  std::deque<std::string> queue{from};
  while (!queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    if (cur != from && goal(*g.find_node(cur))) {
      std::vector<std::string> path{cur};
      for (std::string p = cur; p != from;) {
        p = parent.at(p);
        path.push_back(p);
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const std::string& next : g.uses_of(cur)) {
      if (seen.insert(next).second) {
        parent[next] = cur;
        queue.push_back(next);
      }
    }
  }
  return std::nullopt;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string arrow(const std::string& from, const std::string& to) { return from + " -> " + to; }

// Earliest-declared proof of from -> to, if any.
const ImplicationRecord* earliest_proof(const DepGraph& g, const std::string& from,
                                        const std::string& to) {
  const ImplicationRecord* best = nullptr;
  for (const ImplicationRecord& r : g.implications()) {
    if (r.from == from && r.to == to &&
        (!best || g.position(r.proved_by) < g.position(best->proved_by))) {
      best = &r;
    }
  }
  return best;
}

// Postulates and axioms reachable from `roots` (inclusive), in declaration
// order.
std::vector<std::string> foundations(const DepGraph& g, const std::vector<std::string>& roots) {
  std::set<std::string> seen(roots.begin(), roots.end());
  std::deque<std::string> queue(roots.begin(), roots.end());
  while (!queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    for (const std::string& next : g.uses_of(cur)) {
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<std::string> out;
  for (const Node& n : g.nodes()) {
    if (seen.count(n.id) && (n.kind == NodeKind::kPostulate || n.kind == NodeKind::kAxiom)) {
      out.push_back(n.id);
    }
  }
  return out;
}

}  // namespace

std::vector<Violation> check_k2(const DepGraph& g) {
  std::vector<Violation> out;
  for (const UsesEdge& e : g.uses()) {
    if (g.position(e.to) > g.position(e.from)) {
      out.push_back({Rule::kK2Order, e.from,
                     e.from + " uses " + e.to + ", which is declared after it"});
    }
  }
  std::set<std::pair<std::string, std::string>> reported;
  for (const BuildRecord& b : g.builds()) {
    if (!reported.insert({b.construction, b.target}).second) continue;
    const auto path = find_path(g, b.construction, [&](const Node& n) {
      return n.asserts_existence_of == b.target;
    });
    if (path) {
      out.push_back({Rule::kK2Existence, b.construction,
                     b.construction + " builds " + b.target + ", whose existence " +
                         path->back() + " asserts (" + join(*path, " -> ") + ")"});
    }
  }
  return out;
}

LicenseReport check_licensing(const DepGraph& g) {
  LicenseReport report;
  for (const BuildRecord& b : g.builds()) {
    LicenseRow row;
    row.build = b;
    const std::size_t at = g.position(b.construction);
    if (b.via == b.target) {
      const bool infinite = g.find_property(b.target)->finiteness == Finiteness::kInfinite;
      row.status = infinite ? LicenseStatus::kDirectInfinite : LicenseStatus::kDirect;
      if (infinite) {
        report.violations.push_back({Rule::kDirectInfinite, b.construction,
                                     b.construction + " builds " + b.target +
                                         " directly, but " + b.target + " is infinite"});
      }
      report.rows.push_back(std::move(row));
      continue;
    }

    const ImplicationRecord* fwd = earliest_proof(g, b.via, b.target);
    const ImplicationRecord* conv = earliest_proof(g, b.target, b.via);
    if (fwd && g.position(fwd->proved_by) < at) row.forward_by = fwd->proved_by;
    if (conv && g.position(conv->proved_by) < at) row.converse_by = conv->proved_by;
    std::vector<std::string> proofs;
    if (row.forward_by) proofs.push_back(*row.forward_by);
    if (row.converse_by) proofs.push_back(*row.converse_by);
    row.rests_on = foundations(g, proofs);

    if (row.forward_by && row.converse_by) {
      row.status = LicenseStatus::kLicensed;
    } else {
      row.status = LicenseStatus::kK3;
      std::vector<std::string> missing;
      auto explain = [&](const ImplicationRecord* r, const std::string& from,
                         const std::string& to, const std::optional<std::string>& other) {
        if (r) {
          missing.push_back(arrow(from, to) + " is proved by " + r->proved_by +
                            ", declared after " + b.construction);
        } else if (other) {
          missing.push_back(arrow(from, to) + " (the converse of " + *other + ") is not proved");
        } else {
          missing.push_back(arrow(from, to) + " is not proved");
        }
      };
      if (!row.forward_by) explain(fwd, b.via, b.target, row.converse_by);
      if (!row.converse_by) explain(conv, b.target, b.via, row.forward_by);
      report.violations.push_back({Rule::kK3, b.construction,
                                   b.construction + " builds " + b.target + " via " + b.via +
                                       ", but " + join(missing, "; ")});
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<std::string> unused_properties(const DepGraph& g) {
  std::set<std::string> used;
  for (const Node& n : g.nodes()) {
    if (n.asserts_existence_of) used.insert(*n.asserts_existence_of);
  }
  for (const ImplicationRecord& r : g.implications()) {
    used.insert(r.from);
    used.insert(r.to);
  }
  for (const BuildRecord& b : g.builds()) {
    used.insert(b.target);
    used.insert(b.via);
  }
  std::vector<std::string> out;
  for (const PropertyRecord& p : g.properties()) {
    if (!used.count(p.id)) out.push_back(p.id);
  }
  return out;
}

Analysis analyze(const DepGraph& g) {
  Analysis a;
  a.violations = check_k2(g);
  LicenseReport lic = check_licensing(g);
  a.violations.insert(a.violations.end(), lic.violations.begin(), lic.violations.end());
  std::stable_sort(a.violations.begin(), a.violations.end(),
                   [&](const Violation& x, const Violation& y) {
                     return g.position(x.node) < g.position(y.node);
                   });
  a.rows = std::move(lic.rows);
  return a;
}

std::string format_analysis(const Analysis& a) {
  std::string out = "violations: " + std::to_string(a.violations.size()) + "\n";
  for (const Violation& v : a.violations) {
    out += "  " + std::string(to_string(v.rule)) + " " + v.node + ": " + v.message + "\n";
  }
  out += "licenses: " + std::to_string(a.rows.size()) + "\n";
  for (const LicenseRow& r : a.rows) {
    const BuildRecord& b = r.build;
    out += "  " + b.construction + " builds " + b.target;
    if (b.via != b.target) out += " via " + b.via;
    out += ": ";
    switch (r.status) {
      case LicenseStatus::kLicensed:
        out += "licensed-by-K4(" + *r.forward_by + ", " + *r.converse_by + ")";
        if (!r.rests_on.empty()) out += " rests-on(" + join(r.rests_on, ", ") + ")";
        break;
      case LicenseStatus::kK3: {
        std::vector<std::string> missing;
        if (!r.forward_by) missing.push_back(arrow(b.via, b.target));
        if (!r.converse_by) missing.push_back(arrow(b.target, b.via));
        out += "K3(missing " + join(missing, ", ");
        if (r.forward_by) out += "; have " + arrow(b.via, b.target) + " by " + *r.forward_by;
        if (r.converse_by) {
          out += "; have " + arrow(b.target, b.via) + " by " + *r.converse_by +
                 ", converse missing";
        }
        out += ")";
        break;
      }
      case LicenseStatus::kDirect:
        out += "direct";
        break;
      case LicenseStatus::kDirectInfinite:
        out += "direct-infinite";
        break;
    }
    out += "\n";
  }
  return out;
}

}  // namespace postulatum::kgraph
